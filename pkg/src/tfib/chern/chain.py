"""Chern 1-chains of T^2-bundles over a trivalent discriminant graph.

A chain assigns a rank-2 lattice vector to every oriented edge; reversing
the edge negates the vector. Valid chains synthesize fibrations whose
vertices are all of type (1,2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tfib.errors import ChainError
from tfib.fibration.graph import LEG, Edge, FibrationGraph, LoopEntry, Vertex
from tfib.lattice import IntMatrix, LatticeVector, content, elementary_divisors
from tfib.report import Report, Violation, sorted_violations


@dataclass(frozen=True)
class ChainEdge:
    """``coeff`` is attached to the tail-to-head orientation."""

    id: str
    ends: Tuple[str, str]
    coeff: LatticeVector


@dataclass(frozen=True)
class ChainVertex:
    id: str
    order: Tuple[str, ...]


@dataclass(frozen=True)
class ChernChain:
    vertices: Tuple[ChainVertex, ...]
    edges: Tuple[ChainEdge, ...]
    basis_labels: Tuple[str, str] = ("e1", "e2")
    embedding: Optional[Tuple[LatticeVector, LatticeVector]] = None

    @cached_property
    def edge_index(self) -> Dict[str, ChainEdge]:
        return {edge.id: edge for edge in self.edges}

    def edge(self, edge_id: str) -> ChainEdge:
        return self.edge_index[edge_id]

    def signed_order(self, vertex: ChainVertex) -> List[Tuple[str, int]]:
        """Incident edges in cyclic order with +1 when leaving the vertex."""
        used: Dict[str, int] = {}
        signed = []
        for edge_id in vertex.order:
            edge = self.edge_index.get(edge_id)
            if edge is None:
                signed.append((edge_id, 0))
                continue
            count = used.get(edge_id, 0)
            used[edge_id] = count + 1
            if edge.ends[0] == vertex.id and (edge.ends[1] != vertex.id or count == 0):
                signed.append((edge_id, 1))
            else:
                signed.append((edge_id, -1))
        return signed

    def outgoing(self, vertex: ChainVertex) -> List[LatticeVector]:
        return [
            self.edge(edge_id).coeff.scale(sign) for edge_id, sign in self.signed_order(vertex) if sign
        ]

    def ambient(self, edge_id: str) -> LatticeVector:
        """Coefficient pushed into the ambient lattice of a toric chain."""
        if self.embedding is None:
            raise ChainError("chain has no ambient embedding", "NO_EMBEDDING")
        a, b = self.edge(edge_id).coeff.coords
        return self.embedding[0].scale(a) + self.embedding[1].scale(b)


def validate_chain(chain: ChernChain) -> Report:
    violations: List[Violation] = []
    vertex_ids = {vertex.id for vertex in chain.vertices}
    incident: Dict[str, List[str]] = {vertex_id: [] for vertex_id in vertex_ids}
    for edge in chain.edges:
        if edge.coeff.rank != 2:
            violations.append(Violation("SHAPE", edge.id, "coefficients live in a rank 2 lattice"))
            continue
        if content(edge.coeff.coords) != 1:
            violations.append(Violation("PRIMITIVITY", edge.id, f"coefficient {edge.coeff.coords} is not primitive"))
        for end in edge.ends:
            if end == LEG:
                continue
            if end not in vertex_ids:
                violations.append(Violation("UNKNOWN_VERTEX", edge.id, f"endpoint {end} is not a vertex"))
            else:
                incident[end].append(edge.id)
    for vertex in chain.vertices:
        if sorted(vertex.order) != sorted(incident[vertex.id]):
            violations.append(Violation("LOOP_MISMATCH", vertex.id, "cyclic order does not list the incident edges"))
            continue
        if len(vertex.order) != 3:
            violations.append(Violation("TRIVALENT", vertex.id, f"valency {len(vertex.order)}"))
            continue
        outgoing = chain.outgoing(vertex)
        if any(vector.rank != 2 for vector in outgoing):
            continue
        total = (sum(vector[0] for vector in outgoing), sum(vector[1] for vector in outgoing))
        if total != (0, 0):
            violations.append(Violation("BOUNDARY", vertex.id, f"outgoing coefficients sum to {total}"))
        span = elementary_divisors(IntMatrix.from_rows([vector.coords for vector in outgoing], 2))
        if span != (1, 1):
            violations.append(Violation("SPAN", vertex.id, "incident coefficients do not span the lattice"))
    return Report(sorted_violations(violations))


def _require_valid(chain: ChernChain) -> None:
    report = validate_chain(chain)
    if not report.passed:
        first = report.first()
        assert first is not None
        raise ChainError(f"{first.subject}: {first.code} {first.reason}", "INVALID_CHAIN")


def coefficient_matrix(coeff: Sequence[int]) -> IntMatrix:
    """``[[1,0,a],[0,1,b],[0,0,1]]`` with the base-circle class last."""
    a, b = coeff
    return IntMatrix.from_rows([[1, 0, a], [0, 1, b], [0, 0, 1]])


def monodromy_from_chain(chain: ChernChain, edge_id: str, orientation: int = 1) -> IntMatrix:
    """Monodromy around ``edge_id`` for the given orientation (+1 tail to head)."""
    _require_valid(chain)
    if orientation not in (1, -1):
        raise ChainError("orientation must be +1 or -1", "ORIENTATION")
    return coefficient_matrix(chain.edge(edge_id).coeff.scale(orientation).coords)


def fibration_from_chain(chain: ChernChain, base: str = "ball3") -> FibrationGraph:
    """The T^3-fibration compactifying the T^2-bundle of a valid chain."""
    _require_valid(chain)
    edges = tuple(Edge(edge.id, edge.ends, coefficient_matrix(edge.coeff.coords)) for edge in chain.edges)
    vertices = tuple(
        Vertex(vertex.id, tuple(LoopEntry(edge_id, sign) for edge_id, sign in chain.signed_order(vertex)))
        for vertex in chain.vertices
    )
    return FibrationGraph(base, vertices, edges)


def negate_chain(chain: ChernChain) -> ChernChain:
    edges = tuple(ChainEdge(edge.id, edge.ends, -edge.coeff) for edge in chain.edges)
    return ChernChain(chain.vertices, edges, chain.basis_labels, chain.embedding)


def chain_from_json(data: Dict[str, Any]) -> ChernChain:
    if not isinstance(data, dict):
        raise ChainError("chain document must be an object", "MALFORMED")
    labels = data.get("lattice_basis", ["e1", "e2"])
    if not isinstance(labels, list) or len(labels) != 2:
        raise ChainError("lattice_basis must name two basis vectors", "MALFORMED")
    edges = []
    for index, item in enumerate(data.get("edges", [])):
        try:
            coeff = [int(value) for value in item["coeff"]]
            ends = item["ends"]
            orient = int(item.get("orient", 1))
            edges.append(
                ChainEdge(str(item["id"]), (str(ends[0]), str(ends[1])), LatticeVector(tuple(orient * c for c in coeff)))
            )
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ChainError(f"edges[{index}]: {exc}", "MALFORMED") from exc
    vertices = []
    for index, item in enumerate(data.get("vertices", [])):
        try:
            vertex_id = str(item["id"])
        except (KeyError, TypeError) as exc:
            raise ChainError(f"vertices[{index}]: missing id", "MALFORMED") from exc
        order = item.get("order")
        if order is None:
            order = [edge.id for edge in edges for end in edge.ends if end == vertex_id]
        vertices.append(ChainVertex(vertex_id, tuple(str(edge_id) for edge_id in order)))
    return ChernChain(tuple(vertices), tuple(edges), (str(labels[0]), str(labels[1])))


def chain_to_json(chain: ChernChain) -> Dict[str, Any]:
    return {
        "lattice_basis": list(chain.basis_labels),
        "edges": [{"id": edge.id, "ends": list(edge.ends), "coeff": list(edge.coeff.coords)} for edge in chain.edges],
        "vertices": [{"id": vertex.id, "order": list(vertex.order)} for vertex in chain.vertices],
    }
