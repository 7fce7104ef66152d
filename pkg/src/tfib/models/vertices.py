"""Single-vertex models built from the vertex normal forms."""

from __future__ import annotations

from tfib.fibration.graph import FibrationGraph, single_vertex_model
from tfib.monodromy import T11, T12, T21, T22, normal_form_tuple

VERTEX_KINDS = (T22, T12, T21, T11)


def vertex_model(kind: str, a: int = 0) -> FibrationGraph:
    """A ball with one dissident point of ``kind`` and one leg per loop."""
    return single_vertex_model(normal_form_tuple(kind, a), base="ball3")
