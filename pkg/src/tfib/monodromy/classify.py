"""Classification of local monodromy for well-behaved torus fibrations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from tfib.errors import MonodromyError
from tfib.lattice import (
    IntMatrix,
    LatticeVector,
    complete_basis,
    conjugate,
    determinant,
    elementary_divisors,
    hermite_rows,
    identity,
    inverse_unimodular,
    is_unipotent,
    kernel_saturated,
    primitive_part,
    solve_integer,
    stack,
    trace,
    transpose_inverse,
)

NONSINGULAR = "NONSINGULAR"
T22 = "T22"
T21 = "T21"
T12 = "T12"
T11 = "T11"
I1_2D = "I1_2D"
SPHERE_TR1 = "SPHERE_TR1"
SPHERE_TR3 = "SPHERE_TR3"
NOT_WELL_BEHAVED = "NOT_WELL_BEHAVED"

KINDS = (NONSINGULAR, T22, T21, T12, T11, I1_2D, SPHERE_TR1, SPHERE_TR3, NOT_WELL_BEHAVED)
SEMISTABLE_KINDS = (T22, T21, T12, T11)

_FAMILIES: Dict[Tuple[int, int], str] = {(2, 2): T22, (2, 1): T21, (1, 2): T12, (1, 1): T11}


@dataclass(frozen=True)
class FiberType:
    kind: str
    b1: Optional[int] = None
    b2: Optional[int] = None

    @property
    def semistable(self) -> bool:
        return self.kind in SEMISTABLE_KINDS

    @property
    def betti(self) -> Tuple[Optional[int], Optional[int]]:
        return self.b1, self.b2


@dataclass(frozen=True)
class MonodromyRep:
    """Ordered generators of a local monodromy group in a declared basis."""

    generators: Tuple[IntMatrix, ...]
    basis_label: str = "standard"

    def __post_init__(self) -> None:
        if not self.generators:
            raise MonodromyError("a representation needs at least one generator", "EMPTY")
        size = self.generators[0].nrows
        if size not in (2, 3):
            raise MonodromyError("only rank 2 and rank 3 fibers are modelled", "SHAPE")
        for matrix in self.generators:
            if matrix.shape != (size, size):
                raise MonodromyError("generators must be square of one size", "SHAPE")
            _require_det_one(matrix)

    @classmethod
    def of(cls, *matrices: Sequence[Sequence[int]], basis_label: str = "standard") -> "MonodromyRep":
        return cls(tuple(IntMatrix.from_rows(rows) for rows in matrices), basis_label)

    @property
    def dimension(self) -> int:
        return self.generators[0].nrows


def _require_det_one(matrix: IntMatrix) -> None:
    if not matrix.is_square:
        raise MonodromyError("monodromy must be square", "SHAPE")
    det = determinant(matrix)
    if det != 1:
        raise MonodromyError(f"monodromy has determinant {det}", "DET_NOT_ONE")


def classify_edge_2d(matrix: IntMatrix) -> FiberType:
    """Singular fiber of a rank-2 edge from its monodromy."""
    if matrix.shape != (2, 2):
        raise MonodromyError("expected a 2x2 matrix", "SHAPE")
    _require_det_one(matrix)
    if matrix == identity(2):
        return FiberType(NONSINGULAR)
    if is_unipotent(matrix):
        if (matrix - identity(2)).content() == 1:
            return FiberType(I1_2D)
        return FiberType(NOT_WELL_BEHAVED)
    tr = trace(matrix)
    if tr == 1:
        return FiberType(SPHERE_TR1)
    if tr == 3:
        return FiberType(SPHERE_TR3)
    return FiberType(NOT_WELL_BEHAVED)


def classify_edge_3d(matrix: IntMatrix) -> FiberType:
    """Singular fiber over a generic discriminant point of a rank-3 fibration."""
    if matrix.shape != (3, 3):
        raise MonodromyError("expected a 3x3 matrix", "SHAPE")
    _require_det_one(matrix)
    one = identity(3)
    if matrix == one:
        return FiberType(NONSINGULAR, 3, 3)
    nilpotent = matrix - one
    fixed = kernel_saturated(nilpotent)
    if is_unipotent(matrix):
        if (nilpotent @ nilpotent).is_zero() and len(fixed) == 2 and nilpotent.content() == 1:
            return FiberType(T22, 2, 2)
        return FiberType(NOT_WELL_BEHAVED)
    # a fixed line plus a trace 1 or trace 3 block on the quotient
    if len(fixed) == 1:
        quotient_trace = trace(matrix) - 1
        if quotient_trace == 1:
            return FiberType(SPHERE_TR1)
        if quotient_trace == 3:
            return FiberType(SPHERE_TR3)
    return FiberType(NOT_WELL_BEHAVED)


def betti_pair(generators: Sequence[IntMatrix]) -> Tuple[int, int]:
    """Ranks of the invariant cocycles (b1) and invariant cycles (b2)."""
    size = generators[0].nrows
    one = identity(size)
    b1 = len(kernel_saturated(stack([matrix.transpose() - one for matrix in generators])))
    b2 = len(kernel_saturated(stack([matrix - one for matrix in generators])))
    return b1, b2


def common_row(matrices: Sequence[IntMatrix]) -> Optional[LatticeVector]:
    """Primitive generator of the joint row space when it has rank 1."""
    rows = [row for matrix in matrices for row in matrix.rows if any(row)]
    if not rows:
        return None
    span = hermite_rows(rows, matrices[0].ncols)
    if len(span) != 1:
        return None
    return primitive_part(span[0])


def _spans_plane(pairs: Sequence[Tuple[int, int]]) -> bool:
    if not pairs:
        return False
    return elementary_divisors(IntMatrix.from_rows(pairs, 2)) == (1, 1)


def _positive(columns: list[Tuple[int, ...]]) -> IntMatrix:
    basis = IntMatrix.from_columns(columns)
    if determinant(basis) < 0:
        columns[1] = tuple(-value for value in columns[1])
        basis = IntMatrix.from_columns(columns)
    return basis


def _family_basis(kind: str, generators: Sequence[IntMatrix]) -> Optional[IntMatrix]:
    one = identity(3)
    nilpotents = [matrix - one for matrix in generators]
    if kind == T22:
        u = common_row([n.transpose() for n in nilpotents])
        phi = common_row(nilpotents)
        if u is None or phi is None:
            return None
        kernel = kernel_saturated(IntMatrix.from_rows([phi.coords]))
        local = solve_integer(IntMatrix.from_columns([k.coords for k in kernel]), u.coords)
        if local is None:
            return None
        inner = complete_basis([local.coords], 2).column(1)
        f2 = tuple(sum(c * k[i] for c, k in zip(inner, kernel)) for i in range(3))
        f3 = complete_basis([u.coords, f2], 3).column(2)
        return _positive([u.coords, f2, f3])
    if kind == T12:
        phi = common_row(nilpotents)
        if phi is None:
            return None
        kernel = kernel_saturated(IntMatrix.from_rows([phi.coords]))
        full = complete_basis([k.coords for k in kernel], 3)
        return _positive(list(full.columns()))
    if kind == T21:
        u = common_row([n.transpose() for n in nilpotents])
        if u is None:
            return None
        return _positive(list(complete_basis([u.coords], 3).columns()))
    if kind == T11:
        line = kernel_saturated(stack(nilpotents))
        if len(line) != 1:
            return None
        first = complete_basis([line[0].coords], 3)
        blocks = []
        for n in nilpotents:
            moved = conjugate(n + one, first) - one
            blocks.append(IntMatrix.from_rows([row[1:] for row in moved.rows[1:]]))
        plane = kernel_saturated(stack(blocks))
        if len(plane) != 1:
            return None
        f2 = first.apply((0,) + plane[0].coords).coords
        return _positive(list(complete_basis([line[0].coords, f2], 3).columns()))
    return None


def _in_family(kind: str, normalized: Sequence[IntMatrix]) -> bool:
    """Shape of every generator plus generation of the whole family."""
    for matrix in normalized:
        r = matrix.rows
        if r[1][0] or r[2][0] or r[2][1] or any(r[i][i] != 1 for i in range(3)):
            return False
        if kind == T22 and (r[0][1] or r[1][2]):
            return False
        if kind == T12 and r[0][1]:
            return False
        if kind == T21 and r[1][2]:
            return False
    if kind == T22:
        return elementary_divisors(IntMatrix.from_rows([[m[0, 2]] for m in normalized], 1)) == (1,)
    if kind == T12:
        return _spans_plane([(m[0, 2], m[1, 2]) for m in normalized])
    if kind == T21:
        return _spans_plane([(m[0, 1], m[0, 2]) for m in normalized])
    return _spans_plane([(m[0, 1], m[1, 2]) for m in normalized])


def family_basis(rep: MonodromyRep) -> Tuple[FiberType, IntMatrix]:
    """Fiber type of a semistable rank-3 representation with an adapted basis.

    In the returned basis every generator is upper unitriangular in the
    shape of its family.
    """
    if rep.dimension != 3:
        raise MonodromyError("fiber types are defined for rank 3 representations", "SHAPE")
    for matrix in rep.generators:
        if not is_unipotent(matrix):
            raise MonodromyError("local monodromy is not unipotent", "SEMISTABLE_REQUIRED")
    one = identity(3)
    active = [matrix for matrix in rep.generators if matrix != one]
    if not active:
        return FiberType(NONSINGULAR, 3, 3), one
    b1, b2 = betti_pair(active)
    kind = _FAMILIES.get((b1, b2))
    if kind is None:
        raise MonodromyError(f"invariant ranks ({b1},{b2}) match no family", "NOT_WELL_BEHAVED")
    basis = _family_basis(kind, active)
    if basis is None or not _in_family(kind, [conjugate(matrix, basis) for matrix in active]):
        raise MonodromyError(f"generators do not form the full {kind} family", "NOT_WELL_BEHAVED")
    return FiberType(kind, b1, b2), basis


def fiber_type(rep: MonodromyRep) -> FiberType:
    return family_basis(rep)[0]


def conjugate_rep(rep: MonodromyRep, basis: IntMatrix) -> MonodromyRep:
    """Generators ``P T P^-1``."""
    inverse = inverse_unimodular(basis)
    return MonodromyRep(tuple(basis @ matrix @ inverse for matrix in rep.generators), rep.basis_label)


def dual_rep(rep: MonodromyRep) -> MonodromyRep:
    """Transpose-inverse generators, the monodromy of the dual fibration."""
    label = rep.basis_label[:-5] if rep.basis_label.endswith(":dual") else f"{rep.basis_label}:dual"
    return MonodromyRep(tuple(transpose_inverse(matrix) for matrix in rep.generators), label)
