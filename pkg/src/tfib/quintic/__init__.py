from __future__ import annotations

from .build import (
    FACES,
    SIDES,
    MirrorInvariants,
    QuinticInvariants,
    build_mirror_fibration,
    build_quintic_fibration,
    edge_vertex_id,
    face_chart,
    face_cross_check,
    face_fibration,
    face_label,
    face_matrix,
    gamma_graph,
    leg_side,
    quintic_invariants,
    side_sign,
    verify_edge_factors,
)
from .charts import (
    CHARTS,
    INDICES,
    ChartSystem,
    chart_basis,
    closed_form,
    complement,
    edge_monodromy,
    edge_monodromy_canonical,
    edge_monodromy_map,
    edge_relations,
    normalize,
    ordered_triples,
)

__all__ = [
    "CHARTS",
    "FACES",
    "INDICES",
    "SIDES",
    "ChartSystem",
    "MirrorInvariants",
    "QuinticInvariants",
    "build_mirror_fibration",
    "build_quintic_fibration",
    "chart_basis",
    "closed_form",
    "complement",
    "edge_monodromy",
    "edge_monodromy_canonical",
    "edge_monodromy_map",
    "edge_relations",
    "edge_vertex_id",
    "face_chart",
    "face_cross_check",
    "face_fibration",
    "face_label",
    "face_matrix",
    "gamma_graph",
    "leg_side",
    "normalize",
    "ordered_triples",
    "quintic_invariants",
    "side_sign",
    "verify_edge_factors",
]
