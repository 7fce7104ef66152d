"""Named triangulated polygons."""

from __future__ import annotations

from functools import partial
from typing import Callable, Dict

from tfib.errors import ToricError
from tfib.toric import Triangulation, c3_z3, dilated_triangle, unit_triangle

POLYTOPES: Dict[str, Callable[[], Triangulation]] = {
    "unit": unit_triangle,
    "c3z3": c3_z3,
    "face5": partial(dilated_triangle, 5),
}


def polytope(name: str) -> Triangulation:
    if name not in POLYTOPES:
        raise ToricError(f"unknown polytope {name!r}; choose from {', '.join(sorted(POLYTOPES))}", "UNKNOWN_MODEL")
    return POLYTOPES[name]()
