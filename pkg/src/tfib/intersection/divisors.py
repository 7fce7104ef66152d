"""The 105 toric divisors of the resolved mirror quintic.

Divisors are lattice points of the 2-skeleton of the 5-dilated 4-simplex,
written as barycentric 5-tuples summing to 5:

* ``L{i}``: the corner ``5 e_i``;
* ``E{l}_{i}{j}``: the point of side ``i<j`` with ``a_i = 5 - l`` and ``a_j = l``;
* ``E{l}_{i}{j}{k}``: the ``l``-th interior point of face ``i<j<k``, ordered by
  decreasing ``a_i`` and then decreasing ``a_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from tfib.errors import IntersectionError

DEGREE = 5
INDICES = (0, 1, 2, 3, 4)

LINE = "L"
EDGE = "E_edge"
FACE = "E_face"

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Divisor:
    name: str
    point: Point
    family: str

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(index for index, value in enumerate(self.point) if value)


def face_interior_points(face: Sequence[int]) -> List[Point]:
    """Interior points of a face in naming order."""
    triples = [
        (a, b, DEGREE - a - b)
        for a in range(1, DEGREE)
        for b in range(1, DEGREE)
        if DEGREE - a - b >= 1
    ]
    triples.sort(key=lambda item: (-item[0], -item[1]))
    points = []
    for triple in triples:
        point = [0] * 5
        for index, value in zip(face, triple):
            point[index] = value
        points.append(tuple(point))
    return points


def _name(point: Point) -> str:
    support = [index for index, value in enumerate(point) if value]
    if len(support) == 1:
        return f"L{support[0]}"
    if len(support) == 2:
        i, j = support
        return f"E{point[j]}_{i}{j}"
    if len(support) == 3:
        order = face_interior_points(support)
        return f"E{order.index(point) + 1}_{''.join(map(str, support))}"
    raise IntersectionError(f"{point} is not in the 2-skeleton", "UNKNOWN_DIVISOR")


@dataclass(frozen=True)
class DivisorSet:
    divisors: Tuple[Divisor, ...]

    @cached_property
    def by_name(self) -> Dict[str, int]:
        return {divisor.name: index for index, divisor in enumerate(self.divisors)}

    @cached_property
    def by_point(self) -> Dict[Point, int]:
        return {divisor.point: index for index, divisor in enumerate(self.divisors)}

    def __len__(self) -> int:
        return len(self.divisors)

    def __getitem__(self, index: int) -> Divisor:
        return self.divisors[index]

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(divisor.name for divisor in self.divisors)

    def index(self, name: str) -> int:
        name = canonical_name(name)
        if name not in self.by_name:
            raise IntersectionError(f"unknown divisor {name}", "UNKNOWN_DIVISOR")
        return self.by_name[name]

    def at(self, point: Sequence[int]) -> int:
        key = tuple(point)
        if key not in self.by_point:
            raise IntersectionError(f"no divisor at {key}", "UNKNOWN_DIVISOR")
        return self.by_point[key]

    def family(self, family: str) -> Tuple[int, ...]:
        return tuple(index for index, divisor in enumerate(self.divisors) if divisor.family == family)

    def edge_chain(self, i: int, j: int) -> Tuple[int, ...]:
        """``L_i, E^1_ij, ..., E^4_ij, L_j`` as indices; ``i > j`` walks the chain backwards."""
        chain = []
        for step in range(DEGREE + 1):
            point = [0] * 5
            point[i] += DEGREE - step
            point[j] += step
            chain.append(self.at(point))
        return tuple(chain)


def canonical_name(name: str) -> str:
    """Rewrite ``E{l}_{j}{i}`` with ``j > i`` as ``E{5-l}_{i}{j}``."""
    if name.startswith("E") and "_" in name:
        level, pair = name[1:].split("_", 1)
        if len(pair) == 2 and pair[0] > pair[1] and level.isdigit():
            return f"E{DEGREE - int(level)}_{pair[1]}{pair[0]}"
    return name


@lru_cache(maxsize=None)
def divisor_set() -> DivisorSet:
    divisors: List[Divisor] = []
    for i in INDICES:
        point = tuple(DEGREE if x == i else 0 for x in INDICES)
        divisors.append(Divisor(_name(point), point, LINE))
    for i, j in combinations(INDICES, 2):
        for level in range(1, DEGREE):
            point = tuple(DEGREE - level if x == i else level if x == j else 0 for x in INDICES)
            divisors.append(Divisor(_name(point), point, EDGE))
    for face in combinations(INDICES, 3):
        for point in face_interior_points(face):
            divisors.append(Divisor(_name(point), point, FACE))
    return DivisorSet(tuple(divisors))


def face_divisors(face: Sequence[int]) -> Dict[Tuple[int, int], int]:
    """Global divisor index of each point ``(b, c)`` of the face's dilated triangle.

    The point ``(b, c)`` has barycentric coordinates ``(5-b-c, b, c)`` on
    the face's indices.
    """
    divisors = divisor_set()
    mapping = {}
    for b in range(DEGREE + 1):
        for c in range(DEGREE + 1 - b):
            point = [0] * 5
            for index, value in zip(face, (DEGREE - b - c, b, c)):
                point[index] = value
            mapping[(b, c)] = divisors.at(point)
    return mapping
