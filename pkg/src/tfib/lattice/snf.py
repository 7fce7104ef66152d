"""Smith and Hermite normal forms, echelon reduction and the kernels built on them.

Smith and Hermite forms come from sympy over ``ZZ``. The echelon reduction
is local: it works by unimodular row operations with a fixed pivot rule
(smallest nonzero absolute value, then lowest row), so it is deterministic
and can leave augmented columns untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from tfib.errors import LatticeError
from tfib.lattice.core import IntMatrix, LatticeVector, identity, stack
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

Grid = List[List[int]]


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == D`` with ``D`` diagonal and d1 | d2 | ..."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def divisors(self) -> Tuple[int, ...]:
        size = min(self.D.shape)
        return tuple(self.D[i, i] for i in range(size) if self.D[i, i] != 0)

    @property
    def rank(self) -> int:
        return len(self.divisors)


@dataclass(frozen=True)
class EchelonResult:
    matrix: IntMatrix
    pivots: Tuple[Tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_rows(self) -> IntMatrix:
        return IntMatrix(self.matrix.rows[: self.rank], self.matrix.ncols)


def _swap_rows(grid: Grid, i: int, j: int) -> None:
    if i != j:
        grid[i], grid[j] = grid[j], grid[i]


def _add_row(grid: Grid, target: int, source: int, factor: int) -> None:
    if factor:
        src = grid[source]
        grid[target] = [a + factor * b for a, b in zip(grid[target], src)]


def _to_domain(matrix: IntMatrix) -> DomainMatrix:
    return DomainMatrix([[ZZ(value) for value in row] for row in matrix.rows], matrix.shape, ZZ)


def _from_domain(matrix: DomainMatrix) -> Grid:
    return [[int(value) for value in row] for row in matrix.to_Matrix().tolist()]


def smith_normal_form(matrix: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms ``U``, ``V``."""
    if matrix.nrows == 0 or matrix.ncols == 0:
        raise LatticeError("smith normal form of an empty matrix", "EMPTY")
    d, u, v = (_from_domain(part) for part in smith_normal_decomp(_to_domain(matrix)))
    for i in range(min(matrix.shape)):
        if d[i][i] < 0:
            d[i] = [-a for a in d[i]]
            u[i] = [-a for a in u[i]]
    return SnfResult(
        D=IntMatrix.from_rows(d, matrix.ncols),
        U=IntMatrix.from_rows(u, matrix.nrows),
        V=IntMatrix.from_rows(v, matrix.ncols),
    )


def row_echelon(matrix: IntMatrix, pivot_cols: Optional[int] = None) -> EchelonResult:
    """Integer row echelon form by unimodular row operations.

    Pivots are searched only in the first ``pivot_cols`` columns; the
    remaining columns ride along (augmented right-hand sides).
    """
    grid = [list(row) for row in matrix.rows]
    m = matrix.nrows
    limit = matrix.ncols if pivot_cols is None else pivot_cols
    pivots: List[Tuple[int, int]] = []
    r = 0
    for c in range(limit):
        if r == m:
            break
        while True:
            candidates = [(abs(grid[i][c]), i) for i in range(r, m) if grid[i][c]]
            if not candidates:
                break
            _, best = min(candidates)
            _swap_rows(grid, r, best)
            if len(candidates) == 1:
                break
            p = grid[r][c]
            for i in range(r + 1, m):
                if grid[i][c]:
                    _add_row(grid, i, r, -(grid[i][c] // p))
        if grid[r][c] == 0:
            continue
        if grid[r][c] < 0:
            grid[r] = [-a for a in grid[r]]
        pivots.append((r, c))
        r += 1
    return EchelonResult(IntMatrix.from_rows(grid, matrix.ncols), tuple(pivots))


def hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[LatticeVector, ...]:
    """Row Hermite normal form of the lattice spanned by ``rows`` (nonzero rows only).

    sympy reduces columns with pivots at the bottom, so the rows go in as
    columns with their coordinates reversed and come back out in reverse.
    """
    if not rows:
        return ()
    flipped = IntMatrix.from_rows([[row[ncols - 1 - i] for row in rows] for i in range(ncols)], len(rows))
    reduced = _from_domain(hermite_normal_form(_to_domain(flipped)))
    width = len(reduced[0]) if reduced else 0
    return tuple(
        LatticeVector(tuple(reduced[ncols - 1 - i][c] for i in range(ncols)))
        for c in reversed(range(width))
    )


def rank(matrix: IntMatrix) -> int:
    return row_echelon(matrix).rank


def elementary_divisors(matrix: IntMatrix) -> Tuple[int, ...]:
    """Nonzero elementary divisors in divisibility order."""
    if matrix.nrows == 0 or matrix.ncols == 0:
        return ()
    return smith_normal_form(matrix).divisors


def kernel_saturated(matrix: IntMatrix) -> Tuple[LatticeVector, ...]:
    """Hermite-normalized basis of the saturated kernel ``{v : A v = 0}``."""
    n = matrix.ncols
    reduced = row_echelon(matrix) if matrix.nrows else None
    if reduced is None or reduced.rank == 0:
        return tuple(LatticeVector(row) for row in identity(n).rows)
    if reduced.rank == n:
        return ()
    snf = smith_normal_form(reduced.pivot_rows())
    columns = snf.V.columns()[snf.rank :]
    return hermite_rows(columns, n)


def solve_integer(matrix: IntMatrix, target: Sequence[int]) -> Optional[LatticeVector]:
    """An integer solution of ``A x = b`` or ``None`` when there is none."""
    values = tuple(target)
    if len(values) != matrix.nrows:
        raise LatticeError("right-hand side does not match the row count", "SHAPE")
    snf = smith_normal_form(matrix)
    transformed = snf.U.apply(values)
    divisors = snf.divisors
    y = [0] * matrix.ncols
    for i, value in enumerate(transformed):
        if i < len(divisors):
            if value % divisors[i]:
                return None
            y[i] = value // divisors[i]
        elif value:
            return None
    return snf.V.apply(y)


def inverse_unimodular(matrix: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1."""
    if not matrix.is_square or matrix.nrows == 0:
        raise LatticeError("inverse needs a nonempty square matrix", "SHAPE")
    snf = smith_normal_form(matrix)
    if snf.divisors != (1,) * matrix.nrows:
        raise LatticeError("matrix is not unimodular", "NOT_UNIMODULAR")
    return snf.V @ snf.U


def complete_basis(columns: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """Extend columns spanning a saturated sublattice to a unimodular matrix."""
    k = len(columns)
    if k == 0:
        return identity(n)
    block = IntMatrix.from_columns(columns)
    if block.nrows != n:
        raise LatticeError("columns do not live in the requested rank", "SHAPE")
    snf = smith_normal_form(block)
    if snf.divisors != (1,) * k:
        raise LatticeError("columns do not span a saturated sublattice", "NOT_UNIMODULAR")
    inverse_u = inverse_unimodular(snf.U)
    extra = inverse_u.columns()[k:]
    return IntMatrix.from_columns(list(columns) + list(extra))


def no_invariants_mod_any_n(system: IntMatrix, unknowns: int) -> bool:
    """True iff ``system @ v == 0 (mod n)`` forces ``v == 0`` for every n >= 2."""
    divisors = elementary_divisors(system)
    return len(divisors) == unknowns and all(d == 1 for d in divisors)


def trivial_invariants_all_n(matrices: Sequence[IntMatrix]) -> bool:
    """No nonzero vector is fixed by every matrix modulo any n."""
    if not matrices:
        raise LatticeError("no matrices supplied", "EMPTY")
    size = matrices[0].nrows
    for matrix in matrices:
        if matrix.shape != (size, size):
            raise LatticeError("matrices must be square of one size", "SHAPE")
    system = stack([matrix - identity(size) for matrix in matrices])
    logger.debug("invariant system has shape %s", system.shape)
    return no_invariants_mod_any_n(system, size)
