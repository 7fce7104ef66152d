"""Topological invariants read off a validated discriminant graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from tfib.fibration.graph import FibrationGraph, require_valid
from tfib.lattice import IntMatrix, identity, no_invariants_mod_any_n
from tfib.monodromy import T11, T12, T21, T22, VertexProfile
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

VERTEX_KINDS = (T22, T12, T21, T11)
EULER_CONTRIBUTION: Dict[str, int] = {T12: 1, T21: -1, T22: 0, T11: 0}


@dataclass(frozen=True)
class FiberCensus:
    counts: Dict[str, int]
    profiles: Tuple[Tuple[str, VertexProfile], ...]

    def __getitem__(self, kind: str) -> int:
        return self.counts.get(kind, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class CriticalSurface:
    kind: str
    vertices: Tuple[str, ...]
    genus: int
    punctures: int

    @property
    def stats(self) -> Tuple[int, int]:
        return self.genus, self.punctures


def census(graph: FibrationGraph) -> FiberCensus:
    report = require_valid(graph)
    profiles: Dict[str, VertexProfile] = report.details["profiles"]
    counts = {kind: 0 for kind in VERTEX_KINDS}
    for profile in profiles.values():
        counts[profile.kind] += 1
    logger.info("census: %s", ", ".join(f"{kind}={count}" for kind, count in counts.items()))
    return FiberCensus(counts, tuple(sorted(profiles.items())))


def euler_characteristic(graph: FibrationGraph) -> int:
    """Stratified count: +1 per T12 vertex, -1 per T21 vertex."""
    counts = census(graph).counts
    return sum(EULER_CONTRIBUTION[kind] * count for kind, count in counts.items())


def invariant_system(graph: FibrationGraph) -> Tuple[IntMatrix, List[str]]:
    """Stacked linear system whose solutions mod n are globally invariant 1-cycles.

    One 3-vector unknown per chart: rows ``(M_e - I) v_chart(e)`` for every
    edge and ``P v_chart(e) - v_chart(vertex)`` for every transported loop
    entry.
    """
    charts = graph.charts()
    position = {chart: index for index, chart in enumerate(charts)}
    width = 3 * len(charts)
    rows: List[Tuple[int, ...]] = []

    def place(blocks: Dict[int, IntMatrix]) -> None:
        for r in range(3):
            row = [0] * width
            for slot, block in blocks.items():
                for c in range(3):
                    row[3 * slot + c] += block[r, c]
            rows.append(tuple(row))

    one = identity(3)
    for edge in graph.edges:
        place({position[edge.chart]: edge.monodromy - one})
    for vertex in graph.vertices:
        for entry in vertex.loop:
            if entry.transport is None:
                continue
            source = position[graph.edge(entry.edge).chart]
            target = position[vertex.chart]
            if source == target:
                place({source: entry.transport - one})
            else:
                place({source: entry.transport, target: -one})
    return IntMatrix(tuple(rows), width), charts


def is_simply_connected(graph: FibrationGraph) -> bool:
    """No invariant 1-cycle modulo any n over the whole base."""
    if graph.base != "sphere3":
        logger.warning("simple connectivity criterion applied over base %s", graph.base)
    system, charts = invariant_system(graph)
    if system.nrows == 0:
        return False
    return no_invariants_mod_any_n(system, 3 * len(charts))


def cycle_rank(graph: nx.MultiGraph) -> int:
    """First Betti number E - V + C of a multigraph."""
    return graph.number_of_edges() - graph.number_of_nodes() + nx.number_connected_components(graph)


def critical_surface_stats(graph: FibrationGraph) -> List[CriticalSurface]:
    """Genus and punctures of every connected same-kind trivalent subgraph."""
    report = require_valid(graph)
    profiles: Dict[str, VertexProfile] = report.details["profiles"]
    surfaces: List[CriticalSurface] = []
    for kind in (T12, T21):
        members = {vertex_id for vertex_id, profile in profiles.items() if profile.kind == kind}
        sub = nx.MultiGraph()
        sub.add_nodes_from(members)
        half_edges = {vertex_id: 0 for vertex_id in members}
        for edge in graph.edges:
            tail, head = edge.ends
            for end in edge.ends:
                if end in members:
                    half_edges[end] += 1
            if tail in members and head in members:
                sub.add_edge(tail, head, key=edge.id)
        for component in sorted(nx.connected_components(sub), key=min):
            piece = sub.subgraph(component)
            internal = piece.number_of_edges()
            punctures = sum(half_edges[vertex_id] for vertex_id in component) - 2 * internal
            surfaces.append(CriticalSurface(kind, tuple(sorted(component)), cycle_rank(piece), punctures))
    return surfaces
