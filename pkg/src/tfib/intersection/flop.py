"""Flops of the mirror quintic: flipping a diagonal inside one face.

Only rhombi of four interior points are flipped. Their products are all
determined by the local toric computation, so the form of the flopped
resolution is the tabulated form with that face's local entries redone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple, Union

from tfib.errors import IntersectionError
from tfib.fibration import validate
from tfib.intersection.cubic import (
    CubicForm,
    Triple,
    _point_map,
    authoritative,
    cubic_form_local_toric,
    cubic_form_global,
    key,
    rank_and_radical,
)
from tfib.intersection.divisors import DEGREE, INDICES
from tfib.report import Report
from tfib.toric import Triangulation, dilated_triangle, flip, interior_edges, local_fibration
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

Change = Tuple[Tuple[str, str, str], int, int]


@dataclass(frozen=True)
class FlopReport:
    face: Tuple[int, int, int]
    edge: Tuple[int, int]
    new_edge: Tuple[int, int]
    triangulation: Triangulation
    form: CubicForm
    changes: Tuple[Change, ...]
    rank: int
    radical: int
    diagonal_products: Tuple[int, int]
    fibration: Report

    @property
    def passed(self) -> bool:
        return self.fibration.passed and (self.rank, self.radical) == (101, 4) and self.diagonal_products == (-1, -1)

    def as_dict(self) -> Dict[str, object]:
        names = self.form.divisors.names
        to_global = _point_map(self.face)
        return {
            "face": list(self.face),
            "flipped": [names[to_global[x]] for x in self.edge],
            "new_diagonal": [names[to_global[x]] for x in self.new_edge],
            "rank": self.rank,
            "radical": self.radical,
            "diagonal_products": list(self.diagonal_products),
            "fibration_valid": self.fibration.passed,
            "changes": [{"classes": list(classes), "before": before, "after": after} for classes, before, after in self.changes],
        }


def _face(face: Sequence[int]) -> Tuple[int, int, int]:
    ordered = tuple(sorted(int(index) for index in face))
    if len(ordered) != 3 or len(set(ordered)) != 3 or not all(index in INDICES for index in ordered):
        raise IntersectionError(f"{tuple(face)} is not a face of the simplex", "UNKNOWN_FACE")
    return ordered  # type: ignore[return-value]


def _local_index(face: Tuple[int, int, int], item: Union[int, str], form: CubicForm) -> int:
    """Point index in the face triangulation from a point index or a divisor name."""
    to_global = _point_map(face)
    if isinstance(item, int):
        if item not in to_global:
            raise IntersectionError(f"point {item} is not in the face triangulation", "UNKNOWN_DIVISOR")
        return item
    wanted = form.divisors.index(item)
    for local, index in to_global.items():
        if index == wanted:
            return local
    raise IntersectionError(f"{item} does not lie on face {face}", "UNKNOWN_DIVISOR")


def _rhombus(triangulation: Triangulation, p: int, q: int) -> Tuple[int, int]:
    thirds = [next(x for x in t if x not in (p, q)) for t in triangulation.triangles if p in t and q in t]
    if len(thirds) != 2:
        raise IntersectionError(f"edge {(p, q)} is not an interior edge", "NOT_INTERIOR_TRAPEZOID")
    model = triangulation.model
    if any(model.on_boundary(x) for x in (p, q, *thirds)):
        raise IntersectionError(f"the trapezoid around {(p, q)} touches the boundary", "NOT_INTERIOR_TRAPEZOID")
    r, s = sorted(thirds)
    return r, s


def face_updates(face: Sequence[int], triangulation: Triangulation) -> Dict[Triple, int]:
    """Every locally determined product of the face, zeros included, on global indices."""
    local = cubic_form_local_toric(triangulation)
    to_global = _point_map(face)
    updates: Dict[Triple, int] = {}
    for triple in combinations_with_replacement(sorted(to_global), 3):
        if authoritative(triangulation, triple):
            updates[key(*(to_global[x] for x in triple))] = local.value(*triple)
    return updates


def reassemble(face: Sequence[int], triangulation: Triangulation, base: Optional[CubicForm] = None) -> CubicForm:
    """The global form with ``face`` resolved by ``triangulation``."""
    if base is None:
        base = cubic_form_global()
    return base.with_updates(face_updates(face, triangulation))


def flop(
    face: Sequence[int],
    edge: Sequence[Union[int, str]],
    triangulation: Optional[Triangulation] = None,
) -> FlopReport:
    """Flip ``edge`` of the face triangulation and report every product that moves.

    ``edge`` names two points of the face by local index or divisor name.
    The starting triangulation defaults to the standard subdivision.
    """
    ordered = _face(face)
    base_form = cubic_form_global()
    if triangulation is None:
        triangulation = dilated_triangle(DEGREE)
    p, q = sorted(_local_index(ordered, item, base_form) for item in edge)
    r, s = _rhombus(triangulation, p, q)
    before = reassemble(ordered, triangulation, base_form)
    flipped = flip(triangulation, (p, q))
    after = reassemble(ordered, flipped, base_form)
    names = base_form.divisors.names
    changes: List[Change] = []
    for triple in sorted(set(before.entries) | set(after.entries)):
        old, new = before.value(*triple), after.value(*triple)
        if old != new:
            changes.append((tuple(names[x] for x in triple), old, new))  # type: ignore[arg-type]
    rank, radical = rank_and_radical(after)
    to_global = _point_map(ordered)
    d_r, d_s = to_global[r], to_global[s]
    diagonal = (after.value(d_r, d_r, d_s), after.value(d_r, d_s, d_s))
    fibration = validate(local_fibration(flipped, orientation=-1))
    report = FlopReport(ordered, (p, q), (r, s), flipped, after, tuple(changes), rank, radical, diagonal, fibration)
    logger.info("flop on face %s edge %s: %d products changed", ordered, (p, q), len(changes))
    return report


def interior_rhombi(triangulation: Optional[Triangulation] = None) -> Tuple[Tuple[int, int], ...]:
    """Interior edges whose trapezoid has four interior points."""
    if triangulation is None:
        triangulation = dilated_triangle(DEGREE)
    found = []
    for p, q in interior_edges(triangulation):
        try:
            _rhombus(triangulation, p, q)
        except IntersectionError:
            continue
        found.append((p, q))
    return tuple(found)
