from .graph import LEG, Edge, FibrationGraph, LoopEntry, Vertex, dualize, require_valid, single_vertex_model, validate
from .invariants import (
    CriticalSurface,
    FiberCensus,
    census,
    critical_surface_stats,
    cycle_rank,
    euler_characteristic,
    invariant_system,
    is_simply_connected,
)
from .io import dumps, from_json, loads, to_dot, to_json

__all__ = [
    "LEG",
    "CriticalSurface",
    "Edge",
    "FiberCensus",
    "FibrationGraph",
    "LoopEntry",
    "Vertex",
    "census",
    "critical_surface_stats",
    "cycle_rank",
    "dualize",
    "dumps",
    "euler_characteristic",
    "from_json",
    "invariant_system",
    "is_simply_connected",
    "loads",
    "require_valid",
    "single_vertex_model",
    "to_dot",
    "to_json",
    "validate",
]
