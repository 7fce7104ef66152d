"""JSON persistence for triangulated polygons and their dual graphs."""

from __future__ import annotations

from typing import Any, Dict

from tfib.errors import LatticeError, ToricError
from tfib.toric.dual import DualGraph
from tfib.toric.model import GorensteinModel, Triangulation, check_tiling


def _ints(value: Any, length: int, where: str) -> tuple:
    if not isinstance(value, list) or len(value) != length:
        raise ToricError(f"{where}: expected {length} integers", "MALFORMED")
    if not all(isinstance(entry, int) and not isinstance(entry, bool) for entry in value):
        raise ToricError(f"{where}: entries must be integers", "MALFORMED")
    return tuple(value)


def triangulation_from_json(data: Dict[str, Any]) -> Triangulation:
    """``{"m0": [..3], "points": [[..3], ...], "triangles": [[i, j, k], ...]}``."""
    if not isinstance(data, dict):
        raise ToricError("polytope document must be an object", "MALFORMED")
    for field in ("m0", "points", "triangles"):
        if field not in data:
            raise ToricError(f"polytope: missing field {field!r}", "MALFORMED")
    m0 = _ints(data["m0"], 3, "m0")
    if not isinstance(data["points"], list) or not isinstance(data["triangles"], list):
        raise ToricError("points and triangles must be lists", "MALFORMED")
    points = [_ints(point, 3, f"points[{index}]") for index, point in enumerate(data["points"])]
    triangles = tuple(_ints(triangle, 3, f"triangles[{index}]") for index, triangle in enumerate(data["triangles"]))
    try:
        model = GorensteinModel.of(m0, points)
    except LatticeError as exc:
        raise ToricError(f"polytope: {exc}", "MALFORMED") from exc
    triangulation = Triangulation(model, triangles)
    check_tiling(triangulation)
    return triangulation.canonical()


def triangulation_to_json(triangulation: Triangulation) -> Dict[str, Any]:
    model = triangulation.model
    return {
        "m0": list(model.m0.coords),
        "points": [list(point.coords) for point in model.generators],
        "triangles": [list(triangle) for triangle in triangulation.triangles],
    }


def dual_to_json(graph: DualGraph) -> Dict[str, Any]:
    return {
        "vertices": [{"id": vertex.id, "triangle": list(vertex.triangle), "order": list(vertex.order)} for vertex in graph.vertices],
        "edges": [{"id": edge.id, "ends": list(edge.ends), "crossing": list(edge.crossing)} for edge in graph.edges],
    }
