from __future__ import annotations

from .dual import (
    DualEdge,
    DualGraph,
    DualVertex,
    chern_chain_from_triangulation,
    dual_edge_id,
    dual_graph,
    local_fibration,
    mirror_curve_stats,
)
from .io import dual_to_json, triangulation_from_json, triangulation_to_json
from .model import (
    GorensteinModel,
    Triangulation,
    boundary_edges,
    c3_z3,
    check_tiling,
    convex_hull,
    dilated_points,
    dilated_triangle,
    flip,
    flippable_edges,
    grid_triangulation,
    interior_edges,
    interior_points,
    is_unimodular,
    normalized_area,
    place_and_flip,
    require_unimodular,
    unit_triangle,
)

__all__ = [
    "DualEdge",
    "DualGraph",
    "DualVertex",
    "GorensteinModel",
    "Triangulation",
    "boundary_edges",
    "c3_z3",
    "check_tiling",
    "chern_chain_from_triangulation",
    "convex_hull",
    "dilated_points",
    "dilated_triangle",
    "dual_edge_id",
    "dual_graph",
    "dual_to_json",
    "flip",
    "flippable_edges",
    "grid_triangulation",
    "interior_edges",
    "interior_points",
    "is_unimodular",
    "local_fibration",
    "mirror_curve_stats",
    "normalized_area",
    "place_and_flip",
    "require_unimodular",
    "triangulation_from_json",
    "triangulation_to_json",
    "unit_triangle",
]
