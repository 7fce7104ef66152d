"""Chart lattices of the boundary of the 4-simplex and their transition maps.

``N`` is ``Z^5`` with basis ``e_0..e_4``. The chart lattice ``N_l`` is the
quotient by ``e_l`` and ``e_0 + ... + e_4``; its dual ``M_l`` is the set
of functionals vanishing on both. Elements are handled as 5-tuples:
representatives for ``N_l`` and honest coordinates for ``M_l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence, Tuple

from tfib.errors import QuinticError
from tfib.lattice import IntMatrix, is_unimodular
from tfib.report import Report, Violation

INDICES = (0, 1, 2, 3, 4)
SIMPLEX_DEGREE = 5

Vec5 = Tuple[int, ...]
LinearMap = Callable[[Vec5], Vec5]


def unit(index: int) -> Vec5:
    return tuple(1 if x == index else 0 for x in INDICES)


def complement(*indices: int) -> Tuple[int, ...]:
    if len(set(indices)) != len(indices) or not all(index in INDICES for index in indices):
        raise QuinticError(f"indices {indices} must be distinct members of 0..4", "INDEX_CLASH")
    return tuple(x for x in INDICES if x not in indices)


def normalize(vector: Sequence[int], chart: int, zero_at: int) -> Vec5:
    """Representative of ``vector`` in ``N_chart`` vanishing at ``chart`` and ``zero_at``."""
    if chart == zero_at:
        raise QuinticError("normalization needs two distinct indices", "INDEX_CLASH")
    shift = vector[zero_at]
    return tuple(0 if x in (chart, zero_at) else vector[x] - shift for x in INDICES)


def default_zero(chart: int) -> int:
    return min(x for x in INDICES if x != chart)


def chart_basis(chart: int) -> Tuple[int, ...]:
    """Indices ``x`` whose ``e_x`` form the canonical basis of ``N_chart``."""
    return complement(chart, default_zero(chart))


@dataclass(frozen=True)
class ChartSystem:
    """The transition maps ``T_ij: N_i -> M_j`` with ``T_ij(e_k) = e_k* - e_i*``."""

    def transition(self, i: int, j: int) -> LinearMap:
        complement(i, j)

        def apply(vector: Vec5) -> Vec5:
            w = normalize(vector, i, j)
            out = [0] * 5
            for x in INDICES:
                if x in (i, j):
                    continue
                out[x] += w[x]
                out[i] -= w[x]
            return tuple(out)

        return apply

    def transition_inverse(self, i: int, j: int) -> LinearMap:
        complement(i, j)

        def apply(functional: Vec5) -> Vec5:
            if functional[j] != 0 or sum(functional) != 0:
                raise QuinticError(f"{functional} is not an element of M_{j}", "NOT_IN_CHART")
            return tuple(0 if x in (i, j) else functional[x] for x in INDICES)

        return apply

    def transport(self, src: int, dst: int, via: int) -> LinearMap:
        """Change of chart ``N_src -> N_dst`` through ``M_via``."""
        forward = self.transition(src, via)
        back = self.transition_inverse(dst, via)
        return lambda vector: back(forward(vector))

    def matrix(self, fn: LinearMap, src: int, dst: int) -> IntMatrix:
        """Matrix of ``fn: N_src -> N_dst`` in the canonical chart bases."""
        columns = []
        for x in chart_basis(src):
            image = normalize(fn(unit(x)), dst, default_zero(dst))
            columns.append(tuple(image[y] for y in chart_basis(dst)))
        return IntMatrix.from_columns(columns, 3)

    def transport_matrix(self, src: int, dst: int, via: int) -> IntMatrix:
        return self.matrix(self.transport(src, dst, via), src, dst)

    def is_isomorphism(self, i: int, j: int) -> bool:
        """``T_ij`` sends the basis of ``N_i`` to a basis of ``M_j``."""
        fn = self.transition(i, j)
        basis = [x for x in INDICES if x not in (i, j)]
        rows = [fn(unit(x)) for x in basis]
        coords = [[row[x] for x in basis] for row in rows]
        return is_unimodular(IntMatrix.from_rows(coords, 3))


CHARTS = ChartSystem()


def _compose(*maps: LinearMap) -> LinearMap:
    def apply(vector: Vec5) -> Vec5:
        for fn in reversed(maps):
            vector = fn(vector)
        return vector

    return apply


def edge_monodromy_map(i: int, j: int, k: int) -> Tuple[int, LinearMap]:
    """``(l, T_ij,k)`` as the composite ``T_lj^-1 T_mj T_mi^-1 T_li`` on ``N_l``."""
    l, m = complement(i, j, k)
    composite = _compose(
        CHARTS.transition_inverse(l, j),
        CHARTS.transition(m, j),
        CHARTS.transition_inverse(m, i),
        CHARTS.transition(l, i),
    )
    return l, composite


def closed_form(i: int, j: int, k: int) -> LinearMap:
    """``v -> v + 5 (v_j - v_i) e_m`` on ``N_l``."""
    l, m = complement(i, j, k)

    def apply(vector: Vec5) -> Vec5:
        shift = SIMPLEX_DEGREE * (vector[j] - vector[i])
        return tuple(value + (shift if x == m else 0) for x, value in enumerate(vector))

    return apply


def _matrix_in(fn: LinearMap, chart: int, basis: Sequence[int]) -> IntMatrix:
    zero = next(x for x in INDICES if x != chart and x not in basis)
    columns = []
    for x in basis:
        image = normalize(fn(unit(x)), chart, zero)
        columns.append(tuple(image[y] for y in basis))
    return IntMatrix.from_columns(columns, 3)


def edge_monodromy(i: int, j: int, k: int, basis: Sequence[int] | None = None) -> IntMatrix:
    """Monodromy around the edge loop ``(ij, k)`` in ``N_l``.

    Computed through the chart maps and compared with the closed form.
    The default basis is ``(e_j, e_k, e_m)``.
    """
    l, composite = edge_monodromy_map(i, j, k)
    m = complement(i, j, k)[1]
    basis = tuple(basis) if basis is not None else (j, k, m)
    via_charts = _matrix_in(composite, l, basis)
    if via_charts != _matrix_in(closed_form(i, j, k), l, basis):
        raise QuinticError(f"chart composite for ({i},{j},{k}) disagrees with the closed form", "INCONSISTENT")
    return via_charts


def edge_monodromy_canonical(i: int, j: int, k: int) -> IntMatrix:
    l = complement(i, j, k)[0]
    return edge_monodromy(i, j, k, chart_basis(l))


def ordered_triples() -> Tuple[Tuple[int, int, int], ...]:
    return tuple(permutations(INDICES, 3))


def edge_relations() -> Report:
    """``T_ij,k T_jk,i = T_ik,j`` for every ordered triple, read in the canonical basis of ``N_l``."""
    violations = []
    for i, j, k in ordered_triples():
        left = edge_monodromy_canonical(i, j, k) @ edge_monodromy_canonical(j, k, i)
        if left != edge_monodromy_canonical(i, k, j):
            violations.append(Violation("RELATION_VIOLATED", f"{i}{j}{k}", "edge loops do not compose"))
    return Report(tuple(violations))
