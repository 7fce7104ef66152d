"""Discriminant graphs of T^3-fibrations with monodromy-labelled edges."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from tfib.errors import FibrationError, LatticeError, MonodromyError
from tfib.lattice import IntMatrix, identity, inverse_unimodular, is_unimodular, matrix_power, transpose_inverse
from tfib.monodromy import T22, VertexProfile, classify_edge_3d, vertex_profile
from tfib.report import Report, Violation, sorted_violations
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

LEG = "LEG"
GLOBAL_CHART = "global"
BASES = ("sphere3", "ball3")


@dataclass(frozen=True)
class LoopEntry:
    """One loop of a vertex word: ``(P M_edge P^-1) ** exponent``."""

    edge: str
    exponent: int
    transport: Optional[IntMatrix] = None


@dataclass(frozen=True)
class Vertex:
    id: str
    loop: Tuple[LoopEntry, ...]
    chart: str = GLOBAL_CHART

    @property
    def valency(self) -> int:
        return len(self.loop)


@dataclass(frozen=True)
class Edge:
    """Edge of the discriminant; its monodromy is for the tail-to-head orientation."""

    id: str
    ends: Tuple[str, str]
    monodromy: IntMatrix
    chart: str = GLOBAL_CHART

    @property
    def is_leg(self) -> bool:
        return LEG in self.ends


@dataclass(frozen=True)
class FibrationGraph:
    base: str
    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()

    @cached_property
    def edge_index(self) -> Dict[str, Edge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def vertex_index(self) -> Dict[str, Vertex]:
        return {vertex.id: vertex for vertex in self.vertices}

    def edge(self, edge_id: str) -> Edge:
        return self.edge_index[edge_id]

    def vertex(self, vertex_id: str) -> Vertex:
        return self.vertex_index[vertex_id]

    def charts(self) -> List[str]:
        names = {edge.chart for edge in self.edges} | {vertex.chart for vertex in self.vertices}
        return sorted(names)

    def loop_matrices(self, vertex: Vertex) -> List[IntMatrix]:
        """The matrices a vertex sees, exponents applied, in loop order."""
        seen = []
        for entry in vertex.loop:
            matrix = self.edge(entry.edge).monodromy
            if entry.transport is not None:
                matrix = entry.transport @ matrix @ inverse_unimodular(entry.transport)
            seen.append(matrix_power(matrix, entry.exponent))
        return seen

    def to_networkx(self) -> nx.MultiGraph:
        """Vertices and internal edges; legs become ``leg:<edge>`` nodes."""
        graph = nx.MultiGraph()
        for vertex in self.vertices:
            graph.add_node(vertex.id, leg=False)
        for edge in self.edges:
            ends = [f"leg:{edge.id}" if end == LEG else end for end in edge.ends]
            for end in ends:
                if end.startswith("leg:"):
                    graph.add_node(end, leg=True)
            graph.add_edge(ends[0], ends[1], key=edge.id)
        return graph


def single_vertex_model(
    matrices: Sequence[IntMatrix], base: str = "ball3", vertex_id: str = "v0"
) -> FibrationGraph:
    """One vertex with a leg per matrix; the vertex loop is the given order."""
    edges = tuple(Edge(f"e{index}", (vertex_id, LEG), matrix) for index, matrix in enumerate(matrices))
    loop = tuple(LoopEntry(edge.id, 1) for edge in edges)
    return FibrationGraph(base, (Vertex(vertex_id, loop),), edges)


def _check_edges(graph: FibrationGraph, violations: List[Violation]) -> None:
    seen: set[str] = set()
    for edge in graph.edges:
        if edge.id in seen:
            violations.append(Violation("DUPLICATE_ID", edge.id, "edge id used twice"))
        seen.add(edge.id)
        for end in edge.ends:
            if end != LEG and end not in graph.vertex_index:
                violations.append(Violation("UNKNOWN_VERTEX", edge.id, f"endpoint {end} is not a vertex"))
        try:
            kind = classify_edge_3d(edge.monodromy).kind
        except MonodromyError as exc:
            violations.append(Violation(exc.code, edge.id, str(exc)))
            continue
        if kind != T22:
            violations.append(Violation("EDGE_NOT_T22", edge.id, f"edge monodromy classifies as {kind}"))


def _check_vertex(
    graph: FibrationGraph, vertex: Vertex, violations: List[Violation]
) -> Optional[VertexProfile]:
    before = len(violations)
    if vertex.valency not in (3, 4):
        violations.append(Violation("VALENCY", vertex.id, f"valency {vertex.valency} is not 3 or 4"))
    incident = Counter()
    for edge in graph.edges:
        for end in edge.ends:
            if end == vertex.id:
                incident[edge.id] += 1
    words = Counter(entry.edge for entry in vertex.loop)
    if words != incident:
        violations.append(Violation("LOOP_MISMATCH", vertex.id, "loop word does not match incident edges"))
    for entry in vertex.loop:
        if entry.edge not in graph.edge_index:
            violations.append(Violation("UNKNOWN_EDGE", vertex.id, f"loop uses unknown edge {entry.edge}"))
            continue
        if entry.exponent not in (1, -1):
            violations.append(Violation("EXPONENT", vertex.id, f"exponent {entry.exponent} on {entry.edge}"))
        edge = graph.edge(entry.edge)
        if entry.transport is None:
            if edge.chart != vertex.chart:
                violations.append(
                    Violation(
                        "GAUGE_MISMATCH",
                        vertex.id,
                        f"edge {edge.id} lives in chart {edge.chart}, vertex in {vertex.chart}",
                    )
                )
        elif not is_unimodular(entry.transport):
            violations.append(Violation("NOT_UNIMODULAR", vertex.id, f"transport for {edge.id}"))
    if len(violations) != before:
        return None
    try:
        seen = graph.loop_matrices(vertex)
    except (LatticeError, MonodromyError) as exc:
        violations.append(Violation(exc.code, vertex.id, str(exc)))
        return None
    total = identity(3)
    for matrix in seen:
        total = total @ matrix
    if total != identity(3):
        violations.append(Violation("RELATION_VIOLATED", vertex.id, "ordered loop product is not the identity"))
        return None
    try:
        return vertex_profile(seen)
    except MonodromyError as exc:
        violations.append(Violation(exc.code, vertex.id, str(exc)))
        return None


def validate(graph: FibrationGraph) -> Report:
    """Check edge classes, vertex relations and vertex normal forms.

    ``details["profiles"]`` maps vertex ids to their profiles.
    """
    violations: List[Violation] = []
    if graph.base not in BASES:
        violations.append(Violation("BASE", graph.base, f"base must be one of {', '.join(BASES)}"))
    seen_ids: set[str] = set()
    for vertex in graph.vertices:
        if vertex.id in seen_ids or vertex.id == LEG:
            violations.append(Violation("DUPLICATE_ID", vertex.id, "vertex id reused or reserved"))
        seen_ids.add(vertex.id)
    _check_edges(graph, violations)
    profiles: Dict[str, VertexProfile] = {}
    for vertex in sorted(graph.vertices, key=lambda item: item.id):
        profile = _check_vertex(graph, vertex, violations)
        if profile is not None:
            profiles[vertex.id] = profile
    report = Report(sorted_violations(violations), {"profiles": profiles})
    logger.debug("validated %d vertices, %d edges: %d violations", len(graph.vertices), len(graph.edges), len(violations))
    return report


def require_valid(graph: FibrationGraph) -> Report:
    report = validate(graph)
    if not report.passed:
        first = report.first()
        assert first is not None
        raise FibrationError(f"{first.subject}: {first.code} {first.reason}", "INVALID_GRAPH")
    return report


def dualize(graph: FibrationGraph) -> FibrationGraph:
    """The SYZ dual: transpose-inverse monodromy and transports, same combinatorics."""
    require_valid(graph)
    vertices = tuple(
        Vertex(
            vertex.id,
            tuple(
                LoopEntry(
                    entry.edge,
                    entry.exponent,
                    None if entry.transport is None else transpose_inverse(entry.transport),
                )
                for entry in vertex.loop
            ),
            vertex.chart,
        )
        for vertex in graph.vertices
    )
    edges = tuple(Edge(edge.id, edge.ends, transpose_inverse(edge.monodromy), edge.chart) for edge in graph.edges)
    return FibrationGraph(graph.base, vertices, edges)
