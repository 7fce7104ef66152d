"""Vertex profiles: local monodromy around dissident points and their normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple

from tfib.errors import MonodromyError
from tfib.lattice import (
    IntMatrix,
    complete_basis,
    conjugate,
    determinant,
    identity,
    kernel_saturated,
    product,
    solve_integer,
    transpose_inverse,
)
from tfib.monodromy.classify import (
    T11,
    T12,
    T21,
    T22,
    FiberType,
    MonodromyRep,
    common_row,
    fiber_type,
)

VALENCY: Dict[str, int] = {T22: 2, T12: 3, T21: 3, T11: 4}


@dataclass(frozen=True)
class VertexProfile:
    fiber_type: FiberType
    valency: int
    basis_change: IntMatrix
    parameter: Optional[int] = None
    offset: int = 0

    @property
    def kind(self) -> str:
        return self.fiber_type.kind


def _m(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return IntMatrix.from_rows(rows)


def normal_form_tuple(kind: str, a: int = 0) -> Tuple[IntMatrix, ...]:
    """The ordered normal-form tuple of a vertex of the given kind."""
    if kind == T22:
        return (_m([[1, 0, 1], [0, 1, 0], [0, 0, 1]]), _m([[1, 0, -1], [0, 1, 0], [0, 0, 1]]))
    if kind == T12:
        return (
            _m([[1, 0, 1], [0, 1, 0], [0, 0, 1]]),
            _m([[1, 0, 0], [0, 1, 1], [0, 0, 1]]),
            _m([[1, 0, -1], [0, 1, -1], [0, 0, 1]]),
        )
    if kind == T21:
        return tuple(matrix.transpose() for matrix in normal_form_tuple(T12))
    if kind == T11:
        return (
            _m([[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
            _m([[1, 0, 0], [0, 1, 1], [0, 0, 1]]),
            _m([[1, -1, a], [0, 1, 0], [0, 0, 1]]),
            _m([[1, 0, -a - 1], [0, 1, -1], [0, 0, 1]]),
        )
    raise MonodromyError(f"no vertex normal form for {kind}", "NOT_WELL_BEHAVED")


def _apply(matrix: IntMatrix, vector: Sequence[int]) -> Tuple[int, ...]:
    return matrix.apply(vector).coords


def _negate(vector: Sequence[int]) -> Tuple[int, ...]:
    return tuple(-value for value in vector)


def _unit_solution(row: Sequence[int]) -> Optional[Tuple[int, ...]]:
    found = solve_integer(IntMatrix.from_rows([row]), (1,))
    return None if found is None else found.coords


def _basis_t22(tuple_: Sequence[IntMatrix]) -> Optional[IntMatrix]:
    nilpotent = tuple_[0] - identity(3)
    phi = common_row([nilpotent])
    if phi is None or nilpotent.content() != 1:
        return None
    f3 = _unit_solution(phi.coords)
    if f3 is None:
        return None
    f1 = _apply(nilpotent, f3)
    kernel = kernel_saturated(IntMatrix.from_rows([phi.coords]))
    local = solve_integer(IntMatrix.from_columns([k.coords for k in kernel]), f1)
    if local is None:
        return None
    inner = complete_basis([local.coords], 2).column(1)
    f2 = tuple(sum(c * k[i] for c, k in zip(inner, kernel)) for i in range(3))
    if determinant(IntMatrix.from_columns([f1, f2, f3])) < 0:
        f2 = _negate(f2)
    return IntMatrix.from_columns([f1, f2, f3])


def _basis_t12(tuple_: Sequence[IntMatrix]) -> Optional[IntMatrix]:
    one = identity(3)
    nilpotents = [matrix - one for matrix in tuple_]
    phi = common_row(nilpotents)
    if phi is None:
        return None
    f3 = _unit_solution(phi.coords)
    if f3 is None:
        return None
    columns = [_apply(nilpotents[0], f3), _apply(nilpotents[1], f3), f3]
    det = determinant(IntMatrix.from_columns(columns))
    if abs(det) != 1:
        return None
    if det < 0:
        columns = [_negate(column) for column in columns]
    return IntMatrix.from_columns(columns)


def _basis_t21(tuple_: Sequence[IntMatrix]) -> Optional[IntMatrix]:
    dual = _basis_t12([matrix.transpose() for matrix in tuple_])
    return None if dual is None else transpose_inverse(dual)


def _basis_t11(tuple_: Sequence[IntMatrix]) -> Optional[IntMatrix]:
    one = identity(3)
    n1 = tuple_[0] - one
    n2 = tuple_[1] - one
    corner = n1 @ n2
    phi = common_row([corner])
    if phi is None or corner.content() != 1:
        return None
    kernel = kernel_saturated(n1)
    if len(kernel) != 2:
        return None
    restricted = tuple(phi.dot(k) for k in kernel)
    coefficients = _unit_solution(restricted)
    if coefficients is None:
        return None
    f3 = tuple(sum(c * k[i] for c, k in zip(coefficients, kernel)) for i in range(3))
    f2 = _apply(n2, f3)
    f1 = _apply(n1, f2)
    det = determinant(IntMatrix.from_columns([f1, f2, f3]))
    if abs(det) != 1:
        return None
    if det < 0:
        f1, f2, f3 = _negate(f1), _negate(f2), _negate(f3)
    return IntMatrix.from_columns([f1, f2, f3])


_BUILDERS: Dict[str, Callable[[Sequence[IntMatrix]], Optional[IntMatrix]]] = {
    T22: _basis_t22,
    T12: _basis_t12,
    T21: _basis_t21,
    T11: _basis_t11,
}


def _rotations(kind: str, n: int) -> range:
    # a T11 loop reaches its normal form only from a start whose corner N_i N_(i+1) is nonzero
    return range(n) if kind == T11 else range(1)


def vertex_profile(ordered: Sequence[IntMatrix]) -> VertexProfile:
    """Classify an ordered loop tuple and conjugate it to its normal form.

    ``basis_change`` is the matrix ``B`` with ``B^-1 T_(i+offset) B`` equal
    to the i-th normal-form entry, indices taken cyclically. ``offset`` is
    the first cyclic start that admits the normal form.
    """
    n = len(ordered)
    if not 2 <= n <= 4:
        raise MonodromyError(f"vertex valency {n} is outside 2..4", "VALENCY_MISMATCH")
    rep = MonodromyRep(tuple(ordered))
    if rep.dimension != 3:
        raise MonodromyError("vertex profiles need rank 3 monodromy", "SHAPE")
    if product(rep.generators, 3) != identity(3):
        raise MonodromyError("ordered product of the loop is not the identity", "RELATION_VIOLATED")
    ftype = fiber_type(rep)
    expected = VALENCY.get(ftype.kind)
    if expected is None:
        raise MonodromyError("trivial local monodromy at a vertex", "NOT_WELL_BEHAVED")
    if expected != n:
        raise MonodromyError(f"{ftype.kind} vertices have valency {expected}, got {n}", "VALENCY_MISMATCH")
    for offset in _rotations(ftype.kind, n):
        rotated = rep.generators[offset:] + rep.generators[:offset]
        basis = _BUILDERS[ftype.kind](rotated)
        if basis is None:
            continue
        normalized = tuple(conjugate(matrix, basis) for matrix in rotated)
        parameter = normalized[2][0, 2] if ftype.kind == T11 else None
        if normalized == normal_form_tuple(ftype.kind, parameter or 0):
            return VertexProfile(ftype, n, basis, parameter, offset)
    raise MonodromyError(f"no {ftype.kind} normal form for this tuple", "NOT_WELL_BEHAVED")
