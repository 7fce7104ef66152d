"""Saturation of the lattice spanned by H and the exceptional classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from tfib.errors import IntersectionError
from tfib.intersection.cubic import (
    CubicForm,
    _point_map,
    cubic_form_global,
    generator_columns,
    hyperplane,
    pairing_matrix,
    unit,
)
from tfib.intersection.divisors import DEGREE, EDGE, FACE, INDICES, LINE
from tfib.lattice import IntMatrix, LatticeVector, elementary_divisors, kernel_saturated, row_echelon, solve_integer
from tfib.report import Report, Violation, sorted_violations
from tfib.toric import dilated_triangle, interior_edges
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

CARTAN_A4 = ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2))


@dataclass(frozen=True)
class SaturationResult:
    """``L_sat / L`` with the images of the line classes in it."""

    divisors: Tuple[int, ...]
    generated_by_lines: bool
    line_sum_in_lattice: bool
    rank: int

    @property
    def order(self) -> int:
        total = 1
        for value in self.divisors:
            total *= value
        return total

    def describe(self) -> str:
        if not self.divisors:
            return "trivial"
        parts: Dict[int, int] = {}
        for value in self.divisors:
            parts[value] = parts.get(value, 0) + 1
        group = " x ".join(f"(Z/{value})^{count}" for value, count in sorted(parts.items()))
        suffix = ", generated by L_0..L_4" if self.generated_by_lines else ""
        return group + suffix


def _reduced_blocks(form: CubicForm) -> Tuple[IntMatrix, IntMatrix]:
    """Pivot block ``U`` of the generators and the reduced line columns ``Y``.

    ``[B | b_L]`` is reduced with pivots confined to the generator block, so
    the line columns must vanish below the pivot rows.
    """
    generators = generator_columns(form)
    lines = form.divisors.family(LINE)
    width = len(generators)
    augmented = pairing_matrix(form, generators + [unit(form.size, index) for index in lines])
    reduced = row_echelon(augmented, pivot_cols=width)
    if reduced.rank != width:
        raise IntersectionError(f"generators have rank {reduced.rank}, expected {width}", "INCONSISTENT")
    rows = reduced.matrix.rows
    for row in rows[width:]:
        if any(row[width:]):
            raise IntersectionError("a line class is not rationally in the span of L", "INCONSISTENT")
    block = IntMatrix.from_rows([row[:width] for row in rows[:width]], width)
    images = IntMatrix.from_rows([row[width:] for row in rows[:width]], len(lines))
    return block, images


def saturation_quotient(form: Optional[CubicForm] = None) -> SaturationResult:
    """Finite group ``L_sat / L`` where ``L`` is spanned by H and the exceptional classes.

    ``L_sat / L`` is the cokernel of the pivot block and each line class maps
    to its reduced right-hand side.
    """
    if form is None:
        form = cubic_form_global()
    block, images = _reduced_blocks(form)
    width = block.ncols
    quotient = tuple(value for value in elementary_divisors(block) if value != 1)
    together = IntMatrix.from_rows([block.rows[r] + images.rows[r] for r in range(width)], width + images.ncols)
    generated = elementary_divisors(together) == (1,) * width
    line_sum = [sum(row) for row in images.rows]
    in_lattice = solve_integer(block, line_sum) is not None
    result = SaturationResult(quotient, generated, in_lattice, width)
    logger.info("saturation quotient: %s", result.describe())
    return result


def line_coordinates(form: Optional[CubicForm] = None) -> Dict[str, Dict[str, Fraction]]:
    """Rational coefficients of each ``L_p`` over H and the exceptional classes (nonzero only)."""
    if form is None:
        form = cubic_form_global()
    block, images = _reduced_blocks(form)
    size = block.ncols
    system = DomainMatrix([[QQ(value) for value in row] for row in block.rows], (size, size), QQ)
    names = ["H"] + [form.divisors[index].name for index in form.divisors.family(EDGE) + form.divisors.family(FACE)]
    coordinates = {}
    for offset, index in enumerate(form.divisors.family(LINE)):
        rhs = DomainMatrix([[QQ(value)] for value in images.column(offset)], (size, 1), QQ)
        solution = system.lu_solve(rhs).to_Matrix()
        coordinates[form.divisors[index].name] = {
            name: Fraction(int(value.p), int(value.q)) for name, value in zip(names, solution) if value != 0
        }
    return coordinates


def fiber_class(form: CubicForm, i: int, j: int, k: int, m: int) -> Tuple[int, int, int]:
    """``f_m = E^m_ij . (D(4-m, m, 1) + D(5-m, m-1, 1))`` in face ``(i, j, k)`` as index triples."""
    divisors = form.divisors

    def at(a_i: int, a_j: int, a_k: int) -> int:
        point = [0] * 5
        point[i], point[j], point[k] = a_i, a_j, a_k
        return divisors.at(point)

    base = at(DEGREE - m, m, 0)
    return base, at(4 - m, m, 1), at(5 - m, m - 1, 1)


def pair_with_fiber(form: CubicForm, vector: Sequence[int], fiber: Tuple[int, int, int]) -> int:
    base, first, second = fiber
    n = form.size
    return form.trilinear(vector, unit(n, base), unit(n, first)) + form.trilinear(vector, unit(n, base), unit(n, second))


def fiber_cartan(form: Optional[CubicForm] = None, i: int = 0, j: int = 1, k: int = 2) -> IntMatrix:
    """``(E^l_ij . f_m)``: the negated Cartan matrix of A4."""
    if form is None:
        form = cubic_form_global()
    chain = form.divisors.edge_chain(i, j)
    rows = []
    for level in range(1, 5):
        vector = unit(form.size, chain[level])
        rows.append([pair_with_fiber(form, vector, fiber_class(form, i, j, k, m)) for m in range(1, 5)])
    return IntMatrix.from_rows(rows, 4)


def fibers_orthogonal(form: Optional[CubicForm] = None, i: int = 0, j: int = 1, k: int = 2) -> Report:
    """The fiber classes pair to zero with H and every exceptional class off the chain."""
    if form is None:
        form = cubic_form_global()
    chain = set(form.divisors.edge_chain(i, j)[1:5])
    violations = []
    for m in range(1, 5):
        fiber = fiber_class(form, i, j, k, m)
        columns = [("H", hyperplane(form.size))]
        for index, divisor in enumerate(form.divisors.divisors):
            if divisor.family != LINE and index not in chain:
                columns.append((divisor.name, unit(form.size, index)))
        for name, vector in columns:
            value = pair_with_fiber(form, vector, fiber)
            if value:
                violations.append(Violation("FIBER_PAIRING", f"f{m}.{name}", f"pairs to {value}"))
    return Report(sorted_violations(violations))


@dataclass(frozen=True)
class Trapezoid:
    diagonal: Tuple[str, str]
    flanks: Tuple[str, str]


def trapezoid_congruences(face: Sequence[int], form: Optional[CubicForm] = None) -> Tuple[List[Trapezoid], Report]:
    """For each interior edge ``D2 D4`` with flanks ``D1, D3``: ``D . D2 . D4 = a1 + a3 - a2 - a4``."""
    if form is None:
        form = cubic_form_global()
    triangulation = dilated_triangle(DEGREE)
    to_global = _point_map(face)
    names = form.divisors.names
    trapezoids = []
    violations = []
    for p, q in interior_edges(triangulation):
        flanks = [next(x for x in t if x not in (p, q)) for t in triangulation.triangles if p in t and q in t]
        d2, d4 = to_global[p], to_global[q]
        d1, d3 = to_global[flanks[0]], to_global[flanks[1]]
        expected = {d1: 1, d3: 1, d2: -1, d4: -1}
        for x in range(form.size):
            if form.value(x, d2, d4) != expected.get(x, 0):
                violations.append(Violation("TRAPEZOID", f"{names[d2]}.{names[d4]}", f"coefficient of {names[x]}"))
                break
        trapezoids.append(Trapezoid((names[d2], names[d4]), (names[d1], names[d3])))
    return trapezoids, Report(sorted_violations(violations))


def toric_relations(form: Optional[CubicForm] = None) -> Tuple[LatticeVector, ...]:
    """``R_x = sum (a_x(rho) - 1) D_rho`` for the five barycentric coordinates."""
    if form is None:
        form = cubic_form_global()
    return tuple(
        LatticeVector(tuple(divisor.point[x] - 1 for divisor in form.divisors.divisors)) for x in INDICES
    )


def radical(form: Optional[CubicForm] = None) -> Tuple[LatticeVector, ...]:
    if form is None:
        form = cubic_form_global()
    return kernel_saturated(pairing_matrix(form))


def check_toric_relations(form: Optional[CubicForm] = None) -> Report:
    """The relations lie in the radical, span a saturated rank 4 lattice and fill it."""
    if form is None:
        form = cubic_form_global()
    relations = toric_relations(form)
    pairing = pairing_matrix(form)
    violations = []
    for x, relation in enumerate(relations):
        if not pairing.apply(relation).is_zero():
            violations.append(Violation("NOT_IN_RADICAL", f"R{x}", "relation pairs nontrivially"))
    divisors = elementary_divisors(IntMatrix.from_rows([r.coords for r in relations], form.size))
    if divisors != (1, 1, 1, 1):
        violations.append(Violation("RELATION_SPAN", "R", f"elementary divisors {divisors}"))
    kernel = radical(form)
    if len(kernel) != len(divisors):
        violations.append(Violation("RELATION_SPAN", "radical", f"radical rank {len(kernel)}"))
    return Report(sorted_violations(violations))


def cartan_check(form: Optional[CubicForm] = None) -> Report:
    """``(E^l_ij . f_m) = -Cartan(A4)`` for every ordered face ``(i, j; k)``."""
    if form is None:
        form = cubic_form_global()
    expected = IntMatrix.from_rows(CARTAN_A4, 4).scale(-1)
    violations = []
    for i, j in combinations(INDICES, 2):
        for k in INDICES:
            if k in (i, j):
                continue
            found = fiber_cartan(form, i, j, k)
            if found != expected:
                violations.append(Violation("CARTAN", f"E_{i}{j};{k}", f"pairing {found.to_lists()}"))
    return Report(sorted_violations(violations))
