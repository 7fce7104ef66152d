"""The 300-vertex discriminant graph of the quintic threefold and its mirror."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from tfib.chern import ChernChain, coefficient_matrix
from tfib.errors import QuinticError
from tfib.fibration import (
    CriticalSurface,
    Edge,
    LEG,
    FibrationGraph,
    LoopEntry,
    Vertex,
    census,
    critical_surface_stats,
    dualize,
    euler_characteristic,
    is_simply_connected,
    validate,
)
from tfib.lattice import IntMatrix, identity, inverse_unimodular, matrix_power, product as matrix_product, transpose_inverse
from tfib.monodromy import T12, T21
from tfib.quintic.charts import (
    CHARTS,
    INDICES,
    SIMPLEX_DEGREE,
    Vec5,
    chart_basis,
    complement,
    edge_monodromy_canonical,
)
from tfib.report import Report, Violation, sorted_violations
from tfib.toric import chern_chain_from_triangulation, dilated_points, dilated_triangle, dual_graph, mirror_curve_stats
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

Face = Tuple[int, int, int]
Side = Tuple[int, int]

FACES: Tuple[Face, ...] = tuple(combinations(INDICES, 3))
SIDES: Tuple[Side, ...] = tuple(combinations(INDICES, 2))

# Cited topological constants of the quintic: H^2 = Z and the hyperplane cube.
QUINTIC_B2 = 1
HYPERPLANE_CUBE = 5
CURVE_DEGREE = 5


def face_label(face: Sequence[int]) -> str:
    return "F" + "".join(str(index) for index in face)


def side_label(side: Sequence[int]) -> str:
    return "E" + "".join(str(index) for index in side)


def chart_label(chart: int) -> str:
    return f"N{chart}"


def face_chart(face: Face) -> int:
    return complement(*face)[0]


def edge_vertex_id(side: Side, position: int) -> str:
    return f"{side_label(side)}.{position}"


@lru_cache(maxsize=None)
def face_chain() -> ChernChain:
    """Chain of the 5-dilated triangle with the orientation used on every face."""
    return chern_chain_from_triangulation(dilated_triangle(SIMPLEX_DEGREE), orientation=-1)


@lru_cache(maxsize=None)
def _barycentric() -> Dict[str, Tuple[Tuple[int, int, int], Tuple[int, int, int]]]:
    """Barycentric coordinates of the two ends of the triangulation edge under each dual edge."""
    triangulation = dilated_triangle(SIMPLEX_DEGREE)
    chain = face_chain()
    lookup = {index: (SIMPLEX_DEGREE - b - c, b, c) for (b, c), index in dilated_points(SIMPLEX_DEGREE).items()}
    crossings = {edge.id: edge.crossing for edge in dual_graph(triangulation).edges}
    return {edge.id: (lookup[crossings[edge.id][0]], lookup[crossings[edge.id][1]]) for edge in chain.edges}


def leg_side(face: Face, edge_id: str) -> Tuple[Side, int]:
    """Side of ``face`` a leg crosses, and the leg's position along it."""
    start, end = _barycentric()[edge_id]
    for zero in range(3):
        if start[zero] == 0 and end[zero] == 0:
            kept = [slot for slot in range(3) if slot != zero]
            side = (face[kept[0]], face[kept[1]])
            position = min(start[kept[1]], end[kept[1]])
            return side, position
    raise QuinticError(f"{edge_id} does not cross a side of the face", "INCONSISTENT")


def face_matrix(face: Face, ambient: Sequence[int]) -> IntMatrix:
    """``v -> v + <c, v> e_m`` on ``N_l`` where ``c`` pairs with the face coordinates."""
    l, m = complement(*face)

    def apply(vector: Vec5) -> Vec5:
        pairing = sum(coeff * vector[index] for coeff, index in zip(ambient, face))
        return tuple(value + (pairing if x == m else 0) for x, value in enumerate(vector))

    return CHARTS.matrix(apply, l, l)


def face_fibration(face: Face) -> FibrationGraph:
    """The face's own discriminant graph, legs left open, in chart ``N_l``."""
    chain = face_chain()
    chart = chart_label(face_chart(face))
    label = face_label(face)
    vertices = tuple(
        Vertex(
            f"{label}.{vertex.id}",
            tuple(LoopEntry(f"{label}.{edge_id}", sign) for edge_id, sign in chain.signed_order(vertex)),
            chart,
        )
        for vertex in chain.vertices
    )
    edges = []
    for edge in chain.edges:
        ends = tuple(end if end == LEG else f"{label}.{end}" for end in edge.ends)
        edges.append(Edge(f"{label}.{edge.id}", (ends[0], ends[1]), face_matrix(face, chain.ambient(edge.id).coords), chart))
    return FibrationGraph("ball3", vertices, tuple(edges))


def face_coordinates(face: Face) -> IntMatrix:
    """Rows: functionals on ``N_l`` giving coordinates adapted to the toric chain."""
    l, m = complement(*face)
    embedding = face_chain().embedding
    assert embedding is not None
    b1, b2 = embedding
    rows = []
    for functional in (b1.coords, b2.coords):
        rows.append(tuple(functional[face.index(x)] if x in face else 0 for x in chart_basis(l)))
    rows.append(tuple(1 if x == face[0] else -1 if x == m else 0 for x in chart_basis(l)))
    return IntMatrix.from_rows(rows, 3)


def face_cross_check(face: Face) -> Report:
    """Each face matrix is the toric synthesis, dualized and written in the face chart."""
    coords = face_coordinates(face)
    basis = inverse_unimodular(coords)
    chain = face_chain()
    graph = face_fibration(face)
    violations = []
    for edge in chain.edges:
        expected = basis @ transpose_inverse(coefficient_matrix(edge.coeff.coords)) @ coords
        actual = graph.edge(f"{face_label(face)}.{edge.id}").monodromy
        if actual != expected:
            violations.append(Violation("TORIC_MISMATCH", f"{face_label(face)}.{edge.id}", "face monodromy differs from toric synthesis"))
    return Report(sorted_violations(violations))


def _edge_vertex(
    side: Side, position: int, legs: Dict[int, Tuple[str, IntMatrix]]
) -> Vertex:
    a, b = side
    c1, c2, _ = complement(a, b)
    entries: List[Tuple[str, IntMatrix, Optional[IntMatrix]]] = []
    for c in sorted(legs):
        edge_id, matrix = legs[c]
        transport = CHARTS.transport_matrix(c2, c1, a) if c == c1 else None
        entries.append((edge_id, matrix, transport))
    seen = []
    for _, matrix, transport in entries:
        seen.append(matrix if transport is None else transport @ matrix @ inverse_unimodular(transport))
    vertex_id = edge_vertex_id(side, position)
    for signs in product((-1, 1), repeat=len(seen)):
        total = matrix_product((matrix_power(matrix, sign) for matrix, sign in zip(seen, signs)), 3)
        if total == identity(3):
            loop = tuple(LoopEntry(edge_id, sign, transport) for (edge_id, _, transport), sign in zip(entries, signs))
            return Vertex(vertex_id, loop, chart_label(c1))
    raise QuinticError(f"{vertex_id}: no orientation of the three legs closes up", "INCONSISTENT")


def _assemble() -> FibrationGraph:
    vertices: List[Vertex] = []
    edges: List[Edge] = []
    arriving: Dict[Tuple[Side, int], Dict[int, Tuple[str, IntMatrix]]] = {}
    for face in FACES:
        local = face_fibration(face)
        vertices.extend(local.vertices)
        for edge in local.edges:
            if not edge.is_leg:
                edges.append(edge)
                continue
            side, position = leg_side(face, edge.id.split(".", 1)[1])
            third = next(index for index in face if index not in side)
            arriving.setdefault((side, position), {})[third] = (edge.id, edge.monodromy)
            edges.append(Edge(edge.id, (edge.ends[0], edge_vertex_id(side, position)), edge.monodromy, edge.chart))
    for (side, position), legs in sorted(arriving.items()):
        if len(legs) != 3:
            raise QuinticError(f"{edge_vertex_id(side, position)} receives {len(legs)} legs", "INCONSISTENT")
        vertices.append(_edge_vertex(side, position, legs))
    return FibrationGraph("sphere3", tuple(vertices), tuple(edges))


def side_sign(a: int, b: int, c: int) -> int:
    """-1 when the third face index lies between the side's indices."""
    return -1 if a < c < b else 1


def verify_edge_factors(graph: FibrationGraph) -> Report:
    """Along each side, the five leg monodromies multiply to the edge loop monodromy."""
    violations = []
    for face in FACES:
        label = face_label(face)
        chain = face_chain()
        per_side: Dict[Side, List[IntMatrix]] = {}
        for edge in chain.edges:
            if LEG not in edge.ends:
                continue
            side, _ = leg_side(face, edge.id)
            per_side.setdefault(side, []).append(graph.edge(f"{label}.{edge.id}").monodromy)
        for (a, b), matrices in sorted(per_side.items()):
            c = next(index for index in face if index not in (a, b))
            expected = edge_monodromy_canonical(a, b, c) if side_sign(a, b, c) == 1 else edge_monodromy_canonical(b, a, c)
            subject = f"{label}/{side_label((a, b))}"
            if len(matrices) != SIMPLEX_DEGREE:
                violations.append(Violation("LEG_COUNT", subject, f"{len(matrices)} legs on the side"))
            elif matrix_product(matrices, 3) != expected:
                violations.append(Violation("FACTOR_MISMATCH", subject, "leg product differs from the edge loop"))
    return Report(sorted_violations(violations))


@lru_cache(maxsize=None)
def build_quintic_fibration() -> FibrationGraph:
    graph = _assemble()
    for check in (validate(graph), verify_edge_factors(graph)):
        if not check.passed:
            first = check.first()
            assert first is not None
            raise QuinticError(f"{first.subject}: {first.code} {first.reason}", "INCONSISTENT")
    logger.info("quintic graph: %d vertices, %d edges", len(graph.vertices), len(graph.edges))
    return graph


def gamma_graph() -> nx.Graph:
    """Barycenters of edges and 2-faces of the simplex, joined by inclusion."""
    graph = nx.Graph()
    for side in SIDES:
        graph.add_node("P" + "".join(map(str, side)), kind="edge")
    for face in FACES:
        node = "P" + "".join(map(str, face))
        graph.add_node(node, kind="face")
        for side in combinations(face, 2):
            graph.add_edge("P" + "".join(map(str, side)), node)
    return graph


@dataclass(frozen=True)
class QuinticInvariants:
    euler: int
    simply_connected: bool
    b2: int
    b3: int
    h_cubed: int
    crit_dot_h: int
    p1_dot_h: int
    c2_dot_h: int
    census: Dict[str, int]
    face_surfaces: Tuple[Tuple[int, int], ...]

    def as_dict(self) -> Dict[str, object]:
        return {
            "euler": self.euler,
            "simply_connected": self.simply_connected,
            "b2": self.b2,
            "b3": self.b3,
            "h_cubed": self.h_cubed,
            "crit_dot_h": self.crit_dot_h,
            "p1_dot_h": self.p1_dot_h,
            "c2_dot_h": self.c2_dot_h,
            "census": dict(self.census),
            "face_surfaces": [list(stats) for stats in self.face_surfaces],
        }


def _surfaces(graph: FibrationGraph, kind: str) -> List[CriticalSurface]:
    return [surface for surface in critical_surface_stats(graph) if surface.kind == kind]


def betti_three(b2: int, euler: int) -> int:
    return 2 + 2 * b2 - euler


@lru_cache(maxsize=None)
def quintic_invariants() -> QuinticInvariants:
    graph = build_quintic_fibration()
    counts = census(graph).counts
    euler = euler_characteristic(graph)
    faces = _surfaces(graph, T21)
    crit_dot_h = len(faces) * CURVE_DEGREE
    p1_dot_h = -2 * crit_dot_h
    return QuinticInvariants(
        euler=euler,
        simply_connected=is_simply_connected(graph),
        b2=QUINTIC_B2,
        b3=betti_three(QUINTIC_B2, euler),
        h_cubed=HYPERPLANE_CUBE,
        crit_dot_h=crit_dot_h,
        p1_dot_h=p1_dot_h,
        c2_dot_h=-p1_dot_h // 2,
        census={T12: counts[T12], T21: counts[T21]},
        face_surfaces=tuple(surface.stats for surface in faces),
    )


@dataclass(frozen=True)
class MirrorInvariants:
    euler: int
    simply_connected: bool
    b2: int
    b3: int
    census: Dict[str, int]
    face_surfaces: Tuple[Tuple[int, int], ...]
    mirror_curve: Tuple[int, int]

    def as_dict(self) -> Dict[str, object]:
        return {
            "euler": self.euler,
            "simply_connected": self.simply_connected,
            "b2": self.b2,
            "b3": self.b3,
            "census": dict(self.census),
            "face_surfaces": [list(stats) for stats in self.face_surfaces],
            "mirror_curve": list(self.mirror_curve),
        }


@lru_cache(maxsize=None)
def build_mirror_fibration() -> Tuple[FibrationGraph, MirrorInvariants]:
    """The SYZ dual graph, with b2 read off the rank of the divisor pairing."""
    from tfib.intersection import cubic_form_global, rank_and_radical

    graph = dualize(build_quintic_fibration())
    counts = census(graph).counts
    euler = euler_characteristic(graph)
    b2, _ = rank_and_radical(cubic_form_global())
    record = MirrorInvariants(
        euler=euler,
        simply_connected=is_simply_connected(graph),
        b2=b2,
        b3=betti_three(b2, euler),
        census={T12: counts[T12], T21: counts[T21]},
        face_surfaces=tuple(surface.stats for surface in _surfaces(graph, T12)),
        mirror_curve=mirror_curve_stats(dilated_triangle(SIMPLEX_DEGREE)),
    )
    logger.info("mirror: euler=%d b2=%d b3=%d", record.euler, record.b2, record.b3)
    return graph, record
