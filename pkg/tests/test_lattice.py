import itertools

import pytest
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from tfib.errors import LatticeError
from tfib.lattice import (
    IntMatrix,
    LatticeVector,
    complete_basis,
    determinant,
    elementary_divisors,
    hermite_rows,
    identity,
    inverse_unimodular,
    is_primitive,
    is_unipotent,
    kernel_saturated,
    matrix_power,
    no_invariants_mod_any_n,
    primitive_part,
    rank,
    smith_normal_form,
    solve_integer,
    trace,
    transpose_inverse,
    trivial_invariants_all_n,
)
from tfib.utils import make_rng, random_matrix, random_unimodular


def _sympy_divisors(matrix: IntMatrix):
    factors = invariant_factors(Matrix(matrix.to_lists()), domain=ZZ)
    return tuple(sorted(abs(int(value)) for value in factors if int(value) != 0))


def test_determinant_matches_sympy():
    rng = make_rng(3)
    for _ in range(25):
        matrix = random_matrix(rng, 4, 4)
        assert determinant(matrix) == Matrix(matrix.to_lists()).det()


def test_smith_normal_form_transforms_are_unimodular():
    rng = make_rng(7)
    for _ in range(20):
        matrix = random_matrix(rng, 3, 4, low=-5, high=5)
        snf = smith_normal_form(matrix)
        assert snf.U @ matrix @ snf.V == snf.D
        assert abs(determinant(snf.U)) == 1
        assert abs(determinant(snf.V)) == 1
        divisors = snf.divisors
        for first, second in zip(divisors, divisors[1:]):
            assert second % first == 0


def test_elementary_divisors_match_sympy():
    rng = make_rng(11)
    for _ in range(20):
        matrix = random_matrix(rng, 3, 3, low=-6, high=6)
        assert tuple(sorted(elementary_divisors(matrix))) == _sympy_divisors(matrix)


def test_elementary_divisors_of_diagonal():
    matrix = IntMatrix.from_rows([[2, 0, 0], [0, 3, 0], [0, 0, 0]])
    assert elementary_divisors(matrix) == (1, 6)
    assert rank(matrix) == 2


def test_inverse_unimodular_roundtrip():
    rng = make_rng(5)
    for _ in range(20):
        matrix = random_unimodular(rng, 3)
        inverse = inverse_unimodular(matrix)
        assert matrix @ inverse == identity(3)
        assert inverse.to_lists() == [[int(x) for x in row] for row in Matrix(matrix.to_lists()).inv().tolist()]


def test_inverse_rejects_non_unimodular():
    with pytest.raises(LatticeError) as excinfo:
        inverse_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))
    assert excinfo.value.code == "NOT_UNIMODULAR"


def test_kernel_saturated_is_saturated():
    # the kernel of (2, 4) is spanned by (2, -1), not by (4, -2)
    kernel = kernel_saturated(IntMatrix.from_rows([[2, 4]]))
    assert len(kernel) == 1
    assert is_primitive(kernel[0])
    assert 2 * kernel[0][0] + 4 * kernel[0][1] == 0


def test_kernel_of_full_rank_is_empty():
    assert kernel_saturated(identity(3)) == ()


def test_solve_integer_finds_solutions_and_rejects_fractions():
    matrix = IntMatrix.from_rows([[2, 0], [0, 3]])
    solution = solve_integer(matrix, [4, 9])
    assert solution == LatticeVector.of(2, 3)
    assert solve_integer(matrix, [1, 0]) is None


def test_hermite_rows_is_echelon():
    rows = hermite_rows([[2, 4, 6], [1, 1, 1]], 3)
    assert len(rows) == 2
    assert rows[0][0] > 0
    assert rows[1][0] == 0


def test_complete_basis_extends_primitive_vector():
    basis = complete_basis([(1, 2, 3)], 3)
    assert abs(determinant(basis)) == 1
    assert basis.column(0) == (1, 2, 3)


def test_complete_basis_rejects_non_saturated():
    with pytest.raises(LatticeError):
        complete_basis([(2, 0, 0)], 3)


def test_primitive_part_normalizes_sign():
    assert primitive_part([0, -4, 6]) == LatticeVector.of(0, 2, -3)
    with pytest.raises(LatticeError) as excinfo:
        primitive_part([0, 0])
    assert excinfo.value.code == "ZERO_VECTOR"


def test_unipotent_and_powers():
    shear = IntMatrix.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert is_unipotent(shear)
    assert matrix_power(shear, -1) @ shear == identity(3)
    assert not is_unipotent(IntMatrix.from_rows([[0, -1], [1, 1]]))


def test_transpose_inverse_is_involution():
    rng = make_rng(9)
    matrix = random_unimodular(rng, 3)
    assert transpose_inverse(transpose_inverse(matrix)) == matrix


def test_trivial_invariants_all_n():
    # two shears fixing different lines leave only e1 fixed
    first = IntMatrix.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    second = IntMatrix.from_rows([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    assert not trivial_invariants_all_n([first, second])
    third = IntMatrix.from_rows([[1, 0, 0], [1, 1, 0], [0, 0, 1]])
    fourth = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 1, 1]])
    assert trivial_invariants_all_n([first, second, third, fourth])


def test_no_invariants_mod_any_n_detects_torsion():
    # 2 v = 0 has the solution v = 1 modulo 2
    assert not no_invariants_mod_any_n(IntMatrix.from_rows([[2]]), 1)
    assert no_invariants_mod_any_n(IntMatrix.from_rows([[1]]), 1)


def test_transpose_inverse_is_multiplicative():
    rng = make_rng(13)
    for _ in range(25):
        first = random_unimodular(rng, 3)
        second = random_unimodular(rng, 3)
        assert transpose_inverse(first @ second) == transpose_inverse(first) @ transpose_inverse(second)


def _characteristic_is_unipotent(matrix: IntMatrix) -> bool:
    # (x - 1)^3 = x^3 - 3x^2 + 3x - 1
    rows = matrix.rows
    minors = sum(
        rows[i][i] * rows[j][j] - rows[i][j] * rows[j][i] for i in range(3) for j in range(i + 1, 3)
    )
    return trace(matrix) == 3 and minors == 3 and determinant(matrix) == 1


def test_is_unipotent_matches_characteristic_polynomial():
    for entries in itertools.product(range(-1, 2), repeat=9):
        matrix = IntMatrix.from_rows([entries[0:3], entries[3:6], entries[6:9]])
        assert is_unipotent(matrix) == _characteristic_is_unipotent(matrix), matrix.to_lists()


@pytest.mark.parametrize("nrows", range(1, 6))
@pytest.mark.parametrize("ncols", range(1, 6))
def test_smith_normal_form_small_shapes(nrows, ncols):
    rng = make_rng(100 + 10 * nrows + ncols)
    for _ in range(8):
        matrix = random_matrix(rng, nrows, ncols)
        snf = smith_normal_form(matrix)
        assert snf.U @ matrix @ snf.V == snf.D
        assert abs(determinant(snf.U)) == 1
        assert abs(determinant(snf.V)) == 1
        assert all(snf.D[i, j] == 0 for i in range(nrows) for j in range(ncols) if i != j)
        divisors = snf.divisors
        assert all(d > 0 for d in divisors)
        for first, second in zip(divisors, divisors[1:]):
            assert second % first == 0
        assert tuple(sorted(divisors)) == _sympy_divisors(matrix)


def test_hermite_rows_reduces_above_pivots():
    rows = hermite_rows([[3, 1, 4], [0, 5, 9], [2, 6, 5]], 3)
    for index, row in enumerate(rows):
        pivot = next(c for c, value in enumerate(row) if value)
        assert row[pivot] > 0
        assert all(0 <= earlier[pivot] < row[pivot] for earlier in rows[:index])
    assert abs(determinant(IntMatrix.from_rows(rows))) == abs(
        determinant(IntMatrix.from_rows([[3, 1, 4], [0, 5, 9], [2, 6, 5]]))
    )
