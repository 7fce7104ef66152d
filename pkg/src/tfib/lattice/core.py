"""Exact integer matrices and lattice vectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence, Tuple

from tfib.errors import LatticeError

Row = Tuple[int, ...]


@dataclass(frozen=True)
class LatticeVector:
    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(value, int) for value in self.coords):
            raise LatticeError("lattice vector coordinates must be integers", "SHAPE")

    @classmethod
    def of(cls, *coords: int) -> "LatticeVector":
        return cls(tuple(int(value) for value in coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _same_rank(self, other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        _same_rank(self, other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords))

    def scale(self, factor: int) -> "LatticeVector":
        return LatticeVector(tuple(factor * a for a in self.coords))

    def dot(self, other: "LatticeVector | Sequence[int]") -> int:
        values = tuple(other)
        if len(values) != self.rank:
            raise LatticeError("rank mismatch in dot product", "SHAPE")
        return sum(a * b for a, b in zip(self.coords, values))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def content(self) -> int:
        return content(self.coords)


@dataclass(frozen=True)
class IntMatrix:
    """Row-major exact integer matrix.

    ``ncols`` is stored so that matrices without rows keep their shape.
    """

    rows: Tuple[Row, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 0:
            raise LatticeError("negative column count", "SHAPE")
        for row in self.rows:
            if len(row) != self.ncols:
                raise LatticeError("ragged matrix rows", "SHAPE")
            if not all(isinstance(value, int) for value in row):
                raise LatticeError("matrix entries must be integers", "SHAPE")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        materialized = tuple(tuple(int(value) for value in row) for row in rows)
        if ncols is None:
            if not materialized:
                raise LatticeError("cannot infer the shape of an empty matrix", "EMPTY")
            ncols = len(materialized[0])
        return cls(materialized, ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int | None = None) -> "IntMatrix":
        if not columns:
            if nrows is None:
                raise LatticeError("cannot infer the shape of an empty matrix", "EMPTY")
            return cls(tuple(() for _ in range(nrows)), 0)
        return cls.from_rows(zip(*columns), len(columns))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        row, col = index
        return self.rows[row][col]

    def column(self, index: int) -> Row:
        return tuple(row[index] for row in self.rows)

    def columns(self) -> Tuple[Row, ...]:
        return tuple(self.column(index) for index in range(self.ncols))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.columns(), self.nrows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise LatticeError(f"cannot multiply {self.shape} by {other.shape}", "SHAPE")
        other_cols = other.columns()
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in other_cols) for row in self.rows),
            other.ncols,
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(left, right)) for left, right in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(left, right)) for left, right in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, factor: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(factor * a for a in row) for row in self.rows), self.ncols)

    def apply(self, vector: "LatticeVector | Sequence[int]") -> LatticeVector:
        values = tuple(vector)
        if len(values) != self.ncols:
            raise LatticeError("vector rank does not match matrix columns", "SHAPE")
        return LatticeVector(tuple(sum(a * b for a, b in zip(row, values)) for row in self.rows))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def entries(self) -> Iterator[int]:
        for row in self.rows:
            yield from row

    def content(self) -> int:
        return content(self.entries())

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def _same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise LatticeError(f"shape mismatch {self.shape} vs {other.shape}", "SHAPE")


def _same_rank(left: LatticeVector, right: LatticeVector) -> None:
    if left.rank != right.rank:
        raise LatticeError("rank mismatch", "SHAPE")


def content(values: Iterable[int]) -> int:
    """gcd of the absolute values, 0 for an all-zero input."""
    return reduce(gcd, (abs(value) for value in values), 0)


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)


def zeros(nrows: int, ncols: int) -> IntMatrix:
    return IntMatrix(tuple((0,) * ncols for _ in range(nrows)), ncols)


def diagonal(values: Sequence[int], nrows: int | None = None, ncols: int | None = None) -> IntMatrix:
    nrows = len(values) if nrows is None else nrows
    ncols = len(values) if ncols is None else ncols
    return IntMatrix(
        tuple(
            tuple(values[i] if i == j and i < len(values) else 0 for j in range(ncols)) for i in range(nrows)
        ),
        ncols,
    )


def stack(matrices: Sequence[IntMatrix]) -> IntMatrix:
    """Stack matrices vertically."""
    if not matrices:
        raise LatticeError("nothing to stack", "EMPTY")
    ncols = matrices[0].ncols
    rows: list[Row] = []
    for matrix in matrices:
        if matrix.ncols != ncols:
            raise LatticeError("stacked matrices must share a column count", "SHAPE")
        rows.extend(matrix.rows)
    return IntMatrix(tuple(rows), ncols)


def matrix_power(matrix: IntMatrix, exponent: int) -> IntMatrix:
    """Integer power; negative exponents require a unimodular matrix."""
    if not matrix.is_square:
        raise LatticeError("matrix power needs a square matrix", "SHAPE")
    if exponent < 0:
        from tfib.lattice.snf import inverse_unimodular

        matrix = inverse_unimodular(matrix)
        exponent = -exponent
    result = identity(matrix.nrows)
    base = matrix
    while exponent:
        if exponent & 1:
            result = result @ base
        base = base @ base
        exponent >>= 1
    return result


def product(matrices: Iterable[IntMatrix], size: int) -> IntMatrix:
    """Ordered product ``M_1 @ M_2 @ ...``; the identity when empty."""
    result = identity(size)
    for matrix in matrices:
        result = result @ matrix
    return result


def determinant(matrix: IntMatrix) -> int:
    """Fraction-free Bareiss determinant."""
    if not matrix.is_square:
        raise LatticeError("determinant needs a square matrix", "SHAPE")
    n = matrix.nrows
    if n == 0:
        return 1
    work = [list(row) for row in matrix.rows]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // previous
        previous = work[k][k]
    return sign * work[n - 1][n - 1]


def trace(matrix: IntMatrix) -> int:
    if not matrix.is_square:
        raise LatticeError("trace needs a square matrix", "SHAPE")
    return sum(matrix[i, i] for i in range(matrix.nrows))


def is_unimodular(matrix: IntMatrix) -> bool:
    return matrix.is_square and abs(determinant(matrix)) == 1


def is_primitive(vector: LatticeVector | Sequence[int]) -> bool:
    """True iff the coordinates have gcd 1. The zero vector is rejected."""
    coords = tuple(vector)
    if not any(coords):
        raise LatticeError("primitivity is undefined for the zero vector", "ZERO_VECTOR")
    return content(coords) == 1


def primitive_part(vector: LatticeVector | Sequence[int]) -> LatticeVector:
    """Divide out the content and make the first nonzero coordinate positive."""
    coords = tuple(vector)
    divisor = content(coords)
    if divisor == 0:
        raise LatticeError("the zero vector has no primitive part", "ZERO_VECTOR")
    lead = next(value for value in coords if value != 0)
    if lead < 0:
        divisor = -divisor
    return LatticeVector(tuple(value // divisor for value in coords))


def is_unipotent(matrix: IntMatrix) -> bool:
    """True iff ``(T - I)^n = 0`` for ``n`` the dimension."""
    if not matrix.is_square:
        raise LatticeError("unipotence needs a square matrix", "SHAPE")
    n = matrix.nrows
    nilpotent = matrix - identity(n)
    return matrix_power(nilpotent, n).is_zero()


def transpose_inverse(matrix: IntMatrix) -> IntMatrix:
    """Exact ``(T^t)^-1`` of a unimodular matrix."""
    from tfib.lattice.snf import inverse_unimodular

    return inverse_unimodular(matrix).transpose()


def conjugate(matrix: IntMatrix, basis: IntMatrix) -> IntMatrix:
    """``P^-1 T P``: the matrix of ``T`` in the basis given by the columns of ``P``."""
    from tfib.lattice.snf import inverse_unimodular

    return inverse_unimodular(basis) @ matrix @ basis
