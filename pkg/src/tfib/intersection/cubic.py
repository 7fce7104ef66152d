"""Symmetric integer cubic forms on the divisor classes."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from tfib.errors import IntersectionError
from tfib.intersection.divisors import EDGE, FACE, INDICES, LINE, DivisorSet, divisor_set, face_divisors
from tfib.lattice import IntMatrix, inverse_unimodular, rank
from tfib.report import Report, Violation, sorted_violations
from tfib.toric import Triangulation, dilated_points, dilated_triangle, interior_edges, interior_points, is_unimodular
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

Triple = Tuple[int, int, int]

LINE_CUBE = 9
EDGE_CUBE = 5
INTERIOR_CUBE = 6
TRIANGLE = 1
INTERIOR_EDGE = -1
# (C_p^2 C_{p+1}, C_p C_{p+1}^2) along the chain L_i, E^1_ij, ..., E^4_ij, L_j.
CHAIN_PRODUCTS = ((-3, 1), (-2, 0), (-1, -1), (0, -2), (1, -3))

# Declared second Chern class against each family.
C2_VALUES = {LINE: -6, EDGE: 2, FACE: 0}

H_PRODUCTS = {
    "H^3": 5,
    "H^2.L": 1,
    "H.L.E1": 1,
    "H.L^2": -3,
    "H.E^l.E^l+1": 1,
    "H.(E^l)^2": -2,
}


def key(a: int, b: int, c: int) -> Triple:
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


@dataclass(frozen=True)
class CubicForm:
    """Sparse symmetric trilinear form; ``entries`` holds nonzero values on sorted triples."""

    divisors: DivisorSet
    entries: Mapping[Triple, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for triple, value in self.entries.items():
            if tuple(sorted(triple)) != triple or value == 0:
                raise IntersectionError(f"entry {triple} is not a sorted nonzero triple", "SHAPE")

    @property
    def size(self) -> int:
        return len(self.divisors)

    def value(self, a: int, b: int, c: int) -> int:
        return self.entries.get(key(a, b, c), 0)

    def named(self, a: str, b: str, c: str) -> int:
        index = self.divisors.index
        return self.value(index(a), index(b), index(c))

    def trilinear(self, x: Sequence[int], y: Sequence[int], z: Sequence[int]) -> int:
        total = 0
        for triple, value in self.entries.items():
            for p, q, r in set(permutations(triple)):
                total += value * x[p] * y[q] * z[r]
        return total

    def nonzero(self) -> List[Tuple[Triple, int]]:
        return sorted(self.entries.items())

    def with_updates(self, updates: Mapping[Triple, int]) -> "CubicForm":
        entries = dict(self.entries)
        for triple, value in updates.items():
            triple = key(*triple)
            if value:
                entries[triple] = value
            else:
                entries.pop(triple, None)
        return CubicForm(self.divisors, entries)


def hyperplane(size: int) -> Tuple[int, ...]:
    return (1,) * size


def unit(size: int, index: int) -> Tuple[int, ...]:
    return tuple(1 if x == index else 0 for x in range(size))


def _face_entries(face: Sequence[int], entries: Dict[Triple, int]) -> None:
    triangulation = dilated_triangle(5)
    to_global = _point_map(face)
    for a, b, c in triangulation.triangles:
        entries[key(to_global[a], to_global[b], to_global[c])] = TRIANGLE
    for p, q in interior_edges(triangulation):
        entries[key(to_global[p], to_global[p], to_global[q])] = INTERIOR_EDGE
        entries[key(to_global[p], to_global[q], to_global[q])] = INTERIOR_EDGE
    for p in interior_points(triangulation):
        entries[key(to_global[p], to_global[p], to_global[p])] = INTERIOR_CUBE


def _point_map(face: Sequence[int]) -> Dict[int, int]:
    """Point index of the standard face triangulation to global divisor index."""
    by_bc = face_divisors(face)
    return {index: by_bc[bc] for bc, index in dilated_points(5).items()}


@lru_cache(maxsize=None)
def cubic_form_global() -> CubicForm:
    """The tabulated intersection numbers, checked against the expansion of H."""
    divisors = divisor_set()
    entries: Dict[Triple, int] = {}
    for index in divisors.family(LINE):
        entries[key(index, index, index)] = LINE_CUBE
    for index in divisors.family(EDGE):
        entries[key(index, index, index)] = EDGE_CUBE
    for i, j in combinations(INDICES, 2):
        chain = divisors.edge_chain(i, j)
        for step, (left, right) in enumerate(CHAIN_PRODUCTS):
            here, there = chain[step], chain[step + 1]
            for triple, value in ((key(here, here, there), left), (key(here, there, there), right)):
                if value:
                    entries[triple] = value
    for face in combinations(INDICES, 3):
        _face_entries(face, entries)
    form = CubicForm(divisors, entries)
    report = check_hyperplane(form)
    if not report.passed:
        first = report.first()
        assert first is not None
        raise IntersectionError(f"{first.subject}: {first.reason}", "INCONSISTENT")
    logger.info("cubic form: %d nonzero triples", len(entries))
    return form


def hyperplane_products(form: CubicForm) -> Dict[str, List[int]]:
    """Every H-product family evaluated on every instance."""
    divisors = form.divisors
    h = hyperplane(form.size)
    n = form.size
    values: Dict[str, List[int]] = {name: [] for name in H_PRODUCTS}
    values["H^3"].append(form.trilinear(h, h, h))
    for line in divisors.family(LINE):
        e_line = unit(n, line)
        values["H^2.L"].append(form.trilinear(h, h, e_line))
        values["H.L^2"].append(form.trilinear(h, e_line, e_line))
    for i, j in permutations(INDICES, 2):
        chain = divisors.edge_chain(i, j)
        values["H.L.E1"].append(form.trilinear(h, unit(n, chain[0]), unit(n, chain[1])))
    for i, j in combinations(INDICES, 2):
        chain = divisors.edge_chain(i, j)
        for level in range(1, 5):
            here = unit(n, chain[level])
            values["H.(E^l)^2"].append(form.trilinear(h, here, here))
            if level < 4:
                values["H.E^l.E^l+1"].append(form.trilinear(h, here, unit(n, chain[level + 1])))
    return values


def check_hyperplane(form: CubicForm) -> Report:
    violations = []
    for name, observed in hyperplane_products(form).items():
        wrong = sorted(set(value for value in observed if value != H_PRODUCTS[name]))
        if wrong:
            violations.append(Violation("H_PRODUCT", name, f"expected {H_PRODUCTS[name]}, found {wrong}"))
    return Report(sorted_violations(violations))


@dataclass(frozen=True)
class LocalForm:
    """Products computed from a triangulated polygon; keys are point indices."""

    entries: Dict[Triple, int]
    rays: Dict[int, int]

    def value(self, a: int, b: int, c: int) -> int:
        return self.entries.get(key(a, b, c), 0)


def _flanks(triangulation: Triangulation, p: int, q: int) -> Tuple[int, int]:
    thirds = [next(x for x in t if x not in (p, q)) for t in triangulation.triangles if p in t and q in t]
    if len(thirds) != 2:
        raise IntersectionError(f"edge {(p, q)} is not interior", "INCONSISTENT")
    return thirds[0], thirds[1]


def edge_products(triangulation: Triangulation, p: int, q: int) -> Tuple[int, int]:
    """``(D_p^2 D_q, D_p D_q^2)`` from ``n_r + n_s + a n_p + b n_q = 0``."""
    r, s = _flanks(triangulation, p, q)
    points = triangulation.model.generators
    frame = IntMatrix.from_columns([points[p].coords, points[q].coords, points[r].coords])
    c_p, c_q, c_r = inverse_unimodular(frame).apply(points[s]).coords
    if c_r != -1:
        raise IntersectionError(f"flanks of {(p, q)} are not on opposite sides", "INCONSISTENT")
    return -c_p, -c_q


def cubic_form_local_toric(triangulation: Triangulation) -> LocalForm:
    """Triangle, interior-edge and interior-vertex products of the crepant resolution.

    The cube of an interior divisor is ``K^2`` of its toric surface:
    ``2 r + sum(C_t^2)`` over the ``r`` rays of its star, which must equal
    ``12 - r``.
    """
    if not is_unimodular(triangulation):
        raise IntersectionError("local products need a unimodular triangulation", "NOT_UNIMODULAR")
    entries: Dict[Triple, int] = {}
    for a, b, c in triangulation.triangles:
        entries[key(a, b, c)] = TRIANGLE
    neighbours: Dict[int, List[int]] = {}
    for p, q in interior_edges(triangulation):
        left, right = edge_products(triangulation, p, q)
        if left + right != -2:
            raise IntersectionError(f"edge {(p, q)} products {left}, {right} do not sum to -2", "INCONSISTENT")
        for triple, value in ((key(p, p, q), left), (key(p, q, q), right)):
            if value:
                entries[triple] = value
        neighbours.setdefault(p, []).append(q)
        neighbours.setdefault(q, []).append(p)
    rays: Dict[int, int] = {}
    for v in interior_points(triangulation):
        star = neighbours.get(v, [])
        count = len(star)
        cube = 2 * count + sum(entries.get(key(v, t, t), 0) for t in star)
        if cube != 12 - count:
            raise IntersectionError(f"point {v}: cube {cube} fails 12 - r with r={count}", "INCONSISTENT")
        rays[v] = count
        if cube:
            entries[key(v, v, v)] = cube
    return LocalForm(entries, rays)


def authoritative(triangulation: Triangulation, triple: Triple) -> bool:
    """Whether the local computation determines the product of ``triple``."""
    model = triangulation.model
    distinct = sorted(set(triple))
    if len(distinct) == 3:
        return True
    if len(distinct) == 1:
        return not model.on_boundary(distinct[0])
    return not model.share_side(distinct[0], distinct[1])


def compare_local(face: Sequence[int], form: Optional[CubicForm] = None) -> Report:
    """Local toric products of the standard face triangulation against the form."""
    if form is None:
        form = cubic_form_global()
    triangulation = dilated_triangle(5)
    local = cubic_form_local_toric(triangulation)
    to_global = _point_map(face)
    violations = []
    for triple in combinations_with_replacement(sorted(to_global), 3):
        if not authoritative(triangulation, triple):
            continue
        expected = form.value(*(to_global[x] for x in triple))
        found = local.value(*triple)
        if expected != found:
            names = ".".join(form.divisors[to_global[x]].name for x in triple)
            violations.append(Violation("LOCAL_MISMATCH", names, f"local {found}, form {expected}"))
    return Report(sorted_violations(violations))


def pairing_matrix(form: CubicForm, columns: Optional[Sequence[Sequence[int]]] = None) -> IntMatrix:
    """Rows: nonzero pairs ``D_b D_c``; columns: classes paired against them.

    ``columns`` are coefficient vectors over the divisors; by default the
    divisors themselves.
    """
    by_pair: Dict[Tuple[int, int], Dict[int, int]] = {}
    for triple, value in form.entries.items():
        for x, y, z in set(permutations(triple)):
            by_pair.setdefault((min(y, z), max(y, z)), {})[x] = value
    pairs = sorted(by_pair)
    if columns is None:
        rows = [[by_pair[pair].get(x, 0) for x in range(form.size)] for pair in pairs]
        width = form.size
    else:
        rows = [[sum(coeff * by_pair[pair].get(x, 0) for x, coeff in enumerate(col) if coeff) for col in columns] for pair in pairs]
        width = len(columns)
    unique = sorted({tuple(row) for row in rows if any(row)})
    return IntMatrix.from_rows(unique, width)


def rank_and_radical(form: CubicForm) -> Tuple[int, int]:
    pairing_rank = rank(pairing_matrix(form))
    return pairing_rank, form.size - pairing_rank


def generator_columns(form: CubicForm) -> List[Tuple[int, ...]]:
    """Coefficient vectors of ``H`` and every exceptional class."""
    n = form.size
    columns = [hyperplane(n)]
    for index in form.divisors.family(EDGE) + form.divisors.family(FACE):
        columns.append(unit(n, index))
    return columns


def generator_rank(form: CubicForm) -> int:
    return rank(pairing_matrix(form, generator_columns(form)))


@dataclass(frozen=True)
class IndexCheck:
    name: str
    index: int
    cube: int
    c2: int

    @property
    def holds(self) -> bool:
        return 3 * self.index + self.cube + 2 * self.c2 == 0


def surface_index(family: str, rays: int = 6) -> int:
    """Signature of the divisor as a 4-manifold."""
    if family == LINE:
        return 1
    if family == EDGE:
        return -3
    if family == FACE:
        return 4 - rays
    raise IntersectionError(f"no declared topology for family {family}", "UNKNOWN_TOPOLOGY")


def index_consistency(name: str, form: Optional[CubicForm] = None, rays: int = 6) -> IndexCheck:
    """``3 I(D) + D^3 + 2 c2.D``, which vanishes since ``p1 = -2 c2``."""
    if form is None:
        form = cubic_form_global()
    index = form.divisors.index(name)
    family = form.divisors[index].family
    return IndexCheck(
        name=form.divisors[index].name,
        index=surface_index(family, rays),
        cube=form.value(index, index, index),
        c2=C2_VALUES[family],
    )


def c2_dot_h(form: Optional[CubicForm] = None) -> int:
    if form is None:
        form = cubic_form_global()
    return sum(C2_VALUES[divisor.family] for divisor in form.divisors.divisors)


def edge_chain_identities(form: Optional[CubicForm] = None) -> Report:
    """Along every chain: the section, cube, index and line identities."""
    if form is None:
        form = cubic_form_global()
    divisors = form.divisors
    violations = []
    for i, j in combinations(INDICES, 2):
        chain = divisors.edge_chain(i, j)
        for p in range(1, 5):
            before, here, after = chain[p - 1], chain[p], chain[p + 1]
            subject = divisors[here].name
            sections = form.value(before, before, here) + form.value(here, after, after)
            if sections != -3:
                violations.append(Violation("SECTIONS", subject, f"C1^2 + C2^2 = {sections}"))
            if form.value(here, here, here) != sections + 8:
                violations.append(Violation("EDGE_CUBE", subject, "cube differs from C1^2 + C2^2 + 8"))
            neighbours = form.value(before, here, here) + form.value(here, here, after)
            if neighbours != -1:
                violations.append(Violation("NEIGHBOURS", subject, f"sum {neighbours}"))
            p1 = -2 * neighbours - 2 * (-6 + 9)
            if 3 * surface_index(EDGE) != -form.value(here, here, here) + p1:
                violations.append(Violation("INDEX", subject, f"p1.E = {p1}"))
    for i in INDICES:
        line = divisors.at(tuple(5 if x == i else 0 for x in INDICES))
        firsts = [divisors.edge_chain(i, j)[1] for j in INDICES if j != i]
        subject = divisors[line].name
        if any(form.value(line, first, first) != 1 for first in firsts):
            violations.append(Violation("LINE_SECTION", subject, "L.(E^1)^2 != 1"))
        expected = -2 * (sum(form.value(line, line, first) for first in firsts) + 6) - 3
        if form.value(line, line, line) != expected:
            violations.append(Violation("LINE_CUBE", subject, f"expected {expected}"))
    return Report(sorted_violations(violations))


def nonzero_records(form: CubicForm) -> List[Dict[str, object]]:
    names = form.divisors.names
    return [{"classes": [names[x] for x in triple], "value": value} for triple, value in form.nonzero()]


def form_to_json(form: CubicForm) -> str:
    return json.dumps(nonzero_records(form), indent=1) + "\n"


def form_to_csv(form: CubicForm) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["a", "b", "c", "value"])
    for record in nonzero_records(form):
        writer.writerow([*record["classes"], record["value"]])  # type: ignore[misc]
    return buffer.getvalue()


def grouped_table(form: CubicForm) -> Dict[str, List[Tuple[str, int]]]:
    """Nonzero products grouped as hyperplane, chain, face and cube entries."""
    names = form.divisors.names
    families = [divisor.family for divisor in form.divisors.divisors]
    groups: Dict[str, List[Tuple[str, int]]] = {"hyperplane": [], "chains": [], "faces": [], "cubes": []}
    for name, observed in hyperplane_products(form).items():
        groups["hyperplane"].append((name, observed[0]))
    for triple, value in form.nonzero():
        label = ".".join(names[x] for x in triple)
        distinct = set(triple)
        if len(distinct) == 1:
            groups["cubes"].append((label, value))
        elif any(families[x] == FACE for x in distinct) or len(distinct) == 3:
            groups["faces"].append((label, value))
        else:
            first, second = sorted(distinct)
            on_chain = set(form.divisors[first].support) | set(form.divisors[second].support)
            groups["chains" if len(on_chain) == 2 else "faces"].append((label, value))
    return groups

