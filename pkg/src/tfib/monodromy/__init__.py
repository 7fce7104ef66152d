from __future__ import annotations

from .classify import (
    I1_2D,
    KINDS,
    NONSINGULAR,
    NOT_WELL_BEHAVED,
    SEMISTABLE_KINDS,
    SPHERE_TR1,
    SPHERE_TR3,
    T11,
    T12,
    T21,
    T22,
    FiberType,
    MonodromyRep,
    betti_pair,
    classify_edge_2d,
    classify_edge_3d,
    conjugate_rep,
    dual_rep,
    family_basis,
    fiber_type,
)
from .vertex import VALENCY, VertexProfile, normal_form_tuple, vertex_profile

__all__ = [
    "FiberType",
    "I1_2D",
    "KINDS",
    "MonodromyRep",
    "NONSINGULAR",
    "NOT_WELL_BEHAVED",
    "SEMISTABLE_KINDS",
    "SPHERE_TR1",
    "SPHERE_TR3",
    "T11",
    "T12",
    "T21",
    "T22",
    "VALENCY",
    "VertexProfile",
    "betti_pair",
    "classify_edge_2d",
    "classify_edge_3d",
    "conjugate_rep",
    "dual_rep",
    "family_basis",
    "fiber_type",
    "normal_form_tuple",
    "vertex_profile",
]
