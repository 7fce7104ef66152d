"""JSON persistence and DOT export for fibration graphs."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from tfib.errors import FibrationError, LatticeError
from tfib.fibration.graph import GLOBAL_CHART, LEG, Edge, FibrationGraph, LoopEntry, Vertex, validate
from tfib.lattice import IntMatrix


def _matrix(value: Any, where: str) -> IntMatrix:
    if not isinstance(value, list) or len(value) != 3:
        raise FibrationError(f"{where}: expected a 3x3 integer matrix", "MALFORMED")
    if not all(isinstance(row, list) and len(row) == 3 for row in value):
        raise FibrationError(f"{where}: expected a 3x3 integer matrix", "MALFORMED")
    if not all(isinstance(entry, int) and not isinstance(entry, bool) for row in value for entry in row):
        raise FibrationError(f"{where}: matrix entries must be integers", "MALFORMED")
    try:
        return IntMatrix.from_rows(value, 3)
    except LatticeError as exc:
        raise FibrationError(f"{where}: {exc}", "MALFORMED") from exc


def _require(data: Dict[str, Any], key: str, where: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise FibrationError(f"{where}: missing field {key!r}", "MALFORMED")
    return data[key]


def from_json(data: Dict[str, Any]) -> FibrationGraph:
    base = _require(data, "base", "graph")
    vertices = []
    for index, item in enumerate(_require(data, "vertices", "graph")):
        where = f"vertices[{index}]"
        loop = []
        for position, entry in enumerate(_require(item, "loops", where)):
            spot = f"{where}.loops[{position}]"
            if not isinstance(entry, list) or len(entry) not in (2, 3):
                raise FibrationError(f"{spot}: expected [edge, exp] or [edge, exp, transport]", "MALFORMED")
            transport = _matrix(entry[2], spot) if len(entry) == 3 else None
            if not isinstance(entry[1], int):
                raise FibrationError(f"{spot}: exponent must be an integer", "MALFORMED")
            loop.append(LoopEntry(str(entry[0]), entry[1], transport))
        vertices.append(Vertex(str(_require(item, "id", where)), tuple(loop), str(item.get("chart", GLOBAL_CHART))))
    edges = []
    for index, item in enumerate(_require(data, "edges", "graph")):
        where = f"edges[{index}]"
        ends = _require(item, "ends", where)
        if not isinstance(ends, list) or len(ends) != 2:
            raise FibrationError(f"{where}: ends must have two entries", "MALFORMED")
        edges.append(
            Edge(
                str(_require(item, "id", where)),
                (str(ends[0]), str(ends[1])),
                _matrix(_require(item, "monodromy", where), where),
                str(item.get("chart", GLOBAL_CHART)),
            )
        )
    return FibrationGraph(str(base), tuple(vertices), tuple(edges))


def to_json(graph: FibrationGraph) -> Dict[str, Any]:
    vertices: List[Dict[str, Any]] = []
    for vertex in graph.vertices:
        loops: List[List[Any]] = []
        for entry in vertex.loop:
            item: List[Any] = [entry.edge, entry.exponent]
            if entry.transport is not None:
                item.append(entry.transport.to_lists())
            loops.append(item)
        record: Dict[str, Any] = {"id": vertex.id, "loops": loops}
        if vertex.chart != GLOBAL_CHART:
            record["chart"] = vertex.chart
        vertices.append(record)
    edges: List[Dict[str, Any]] = []
    for edge in graph.edges:
        record = {"id": edge.id, "ends": list(edge.ends), "monodromy": edge.monodromy.to_lists()}
        if edge.chart != GLOBAL_CHART:
            record["chart"] = edge.chart
        edges.append(record)
    return {"base": graph.base, "vertices": vertices, "edges": edges}


def dumps(graph: FibrationGraph) -> str:
    return json.dumps(to_json(graph), indent=1, sort_keys=True) + "\n"


def loads(text: str) -> FibrationGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FibrationError(f"line {exc.lineno} column {exc.colno}: {exc.msg}", "MALFORMED") from exc
    return from_json(data)


def to_dot(graph: FibrationGraph, labels: Optional[Dict[str, str]] = None) -> str:
    """Graphviz text; vertices are labelled with their fiber kind."""
    if labels is None:
        profiles = validate(graph).details["profiles"]
        labels = {vertex_id: profile.kind for vertex_id, profile in profiles.items()}
    lines = ["graph fibration {"]
    for vertex in graph.vertices:
        lines.append(f'  "{vertex.id}" [label="{labels.get(vertex.id, "?")}"];')
    for edge in graph.edges:
        ends = []
        for end in edge.ends:
            if end == LEG:
                leg = f"leg:{edge.id}"
                lines.append(f'  "{leg}" [shape=point];')
                ends.append(leg)
            else:
                ends.append(end)
        lines.append(f'  "{ends[0]}" -- "{ends[1]}" [label="{edge.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
