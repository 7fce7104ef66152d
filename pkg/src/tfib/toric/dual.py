"""Dual cell complexes of toric triangulations and their Chern chains."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

from tfib.chern import ChainEdge, ChainVertex, ChernChain, fibration_from_chain
from tfib.errors import ToricError
from tfib.fibration.graph import LEG, FibrationGraph
from tfib.lattice import LatticeVector
from tfib.toric.model import Triangulation, boundary_edges, interior_points, require_unimodular
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class DualEdge:
    """Dual of a triangulation edge; ``crossing`` is the edge as the tail triangle traverses it."""

    id: str
    ends: Tuple[str, str]
    crossing: Tuple[int, int]

    @property
    def is_leg(self) -> bool:
        return self.ends[1] == LEG


@dataclass(frozen=True)
class DualVertex:
    id: str
    triangle: Tuple[int, int, int]
    order: Tuple[str, ...]


@dataclass(frozen=True)
class DualGraph:
    vertices: Tuple[DualVertex, ...]
    edges: Tuple[DualEdge, ...]

    @cached_property
    def edge_index(self) -> Dict[str, DualEdge]:
        return {edge.id: edge for edge in self.edges}

    @property
    def legs(self) -> Tuple[DualEdge, ...]:
        return tuple(edge for edge in self.edges if edge.is_leg)

    @property
    def internal(self) -> Tuple[DualEdge, ...]:
        return tuple(edge for edge in self.edges if not edge.is_leg)


def dual_edge_id(p: int, q: int, leg: bool) -> str:
    low, high = min(p, q), max(p, q)
    return f"leg{low}_{high}" if leg else f"d{low}_{high}"


def dual_graph(triangulation: Triangulation) -> DualGraph:
    """One vertex per triangle, one edge per interior edge, one leg per boundary edge.

    An internal dual edge points away from the triangle that runs along
    its edge from the smaller to the larger point index.
    """
    require_unimodular(triangulation)
    canonical = triangulation.canonical()
    boundary = set(boundary_edges(canonical))
    owner: Dict[Tuple[int, int], str] = {}
    vertices: List[DualVertex] = []
    for number, (a, b, c) in enumerate(canonical.triangles):
        vertex_id = f"t{number}"
        order = []
        for p, q in ((a, b), (b, c), (c, a)):
            order.append(dual_edge_id(p, q, (min(p, q), max(p, q)) in boundary))
            owner[(p, q)] = vertex_id
        vertices.append(DualVertex(vertex_id, (a, b, c), tuple(order)))
    edges: List[DualEdge] = []
    for (p, q), vertex_id in sorted(owner.items()):
        if (min(p, q), max(p, q)) in boundary:
            edges.append(DualEdge(dual_edge_id(p, q, True), (vertex_id, LEG), (p, q)))
        elif p < q:
            edges.append(DualEdge(dual_edge_id(p, q, False), (vertex_id, owner[(q, p)]), (p, q)))
    graph = DualGraph(tuple(vertices), tuple(sorted(edges, key=lambda edge: edge.id)))
    logger.debug(
        "dual graph: %d vertices, %d internal edges, %d legs",
        len(graph.vertices),
        len(graph.internal),
        len(graph.legs),
    )
    return graph


def chern_chain_from_triangulation(triangulation: Triangulation, orientation: int = 1) -> ChernChain:
    """Chain assigning ``tau_p - tau_q`` to the dual of a traversed edge ``p -> q``.

    ``orientation=-1`` reverses the orientation of the polygon and negates
    every coefficient.
    """
    if orientation not in (1, -1):
        raise ToricError("orientation must be +1 or -1", "ORIENTATION")
    graph = dual_graph(triangulation)
    model = triangulation.model
    edges = []
    for edge in graph.edges:
        p, q = edge.crossing
        difference = (model.generators[p] - model.generators[q]).scale(orientation)
        edges.append(ChainEdge(edge.id, edge.ends, _plane_vector(triangulation, difference)))
    vertices = tuple(ChainVertex(vertex.id, vertex.order) for vertex in graph.vertices)
    return ChernChain(vertices, tuple(edges), ("b1", "b2"), model.plane_basis)


def _plane_vector(triangulation: Triangulation, vector: LatticeVector) -> LatticeVector:
    return LatticeVector(triangulation.model.plane_coordinates(vector))


def mirror_curve_stats(triangulation: Triangulation) -> Tuple[int, int]:
    """(genus, punctures): interior lattice points used and boundary edges."""
    require_unimodular(triangulation)
    return len(interior_points(triangulation)), len(boundary_edges(triangulation))


def local_fibration(triangulation: Triangulation, orientation: int = 1) -> FibrationGraph:
    return fibration_from_chain(chern_chain_from_triangulation(triangulation, orientation), base="ball3")
