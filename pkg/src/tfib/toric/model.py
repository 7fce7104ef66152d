"""Gorenstein cones over lattice polygons and their triangulations.

Generators live in a rank-3 lattice at height one against ``m0``. Planar
questions (hull, area, boundary) are answered in an integral chart of the
height-one plane; orientation uses 3x3 determinants directly.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from tfib.errors import ToricError
from tfib.lattice import IntMatrix, LatticeVector, determinant, inverse_unimodular, kernel_saturated
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

Triangle = Tuple[int, int, int]
EdgeKey = Tuple[int, int]
Point2 = Tuple[int, int]


@dataclass(frozen=True)
class GorensteinModel:
    m0: LatticeVector
    generators: Tuple[LatticeVector, ...]

    def __post_init__(self) -> None:
        if self.m0.rank != 3 or any(point.rank != 3 for point in self.generators):
            raise ToricError("generators and m0 live in rank 3", "SHAPE")
        if len(self.generators) < 3:
            raise ToricError("a polygon needs at least three generators", "SHAPE")
        for index, point in enumerate(self.generators):
            if self.m0.dot(point) != 1:
                raise ToricError(f"generator {index} is not at height 1", "HEIGHT")
        if len(set(self.generators)) != len(self.generators):
            raise ToricError("generators must be distinct", "SHAPE")

    @classmethod
    def of(cls, m0: Sequence[int], points: Sequence[Sequence[int]]) -> "GorensteinModel":
        return cls(LatticeVector(tuple(m0)), tuple(LatticeVector(tuple(point)) for point in points))

    @cached_property
    def plane_basis(self) -> Tuple[LatticeVector, LatticeVector]:
        """A basis of ``N_{m0} = {n : <m0, n> = 0}``."""
        basis = kernel_saturated(IntMatrix.from_rows([self.m0.coords]))
        return basis[0], basis[1]

    @cached_property
    def _chart_inverse(self) -> IntMatrix:
        b1, b2 = self.plane_basis
        frame = IntMatrix.from_columns([b1.coords, b2.coords, self.generators[0].coords])
        return inverse_unimodular(frame)

    def plane_coordinates(self, vector: LatticeVector) -> Point2:
        """Coordinates of a vector of ``N_{m0}`` in ``plane_basis``."""
        x, y, z = self._chart_inverse.apply(vector).coords
        if z != 0:
            raise ToricError("vector does not lie in N_m0", "HEIGHT")
        return x, y

    def chart(self, index: int) -> Point2:
        return self.plane_coordinates(self.generators[index] - self.generators[0])

    @cached_property
    def hull(self) -> Tuple[int, ...]:
        """Indices of the polygon's corners, counterclockwise in the chart."""
        return convex_hull([self.chart(index) for index in range(len(self.generators))])

    @cached_property
    def twice_area(self) -> int:
        corners = [self.chart(index) for index in self.hull]
        total = 0
        for (x1, y1), (x2, y2) in zip(corners, corners[1:] + corners[:1]):
            total += x1 * y2 - x2 * y1
        return abs(total)

    def _sides(self) -> List[Tuple[Point2, Point2]]:
        corners = [self.chart(corner) for corner in self.hull]
        return list(zip(corners, corners[1:] + corners[:1]))

    def on_boundary(self, index: int) -> bool:
        point = self.chart(index)
        return any(_cross(start, end, point) == 0 and _between(start, end, point) for start, end in self._sides())

    def share_side(self, first: int, second: int) -> bool:
        """Both points lie on one side of the polygon."""
        p, q = self.chart(first), self.chart(second)
        for start, end in self._sides():
            if all(_cross(start, end, x) == 0 and _between(start, end, x) for x in (p, q)):
                return True
        return False


def _cross(o: Point2, a: Point2, b: Point2) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _between(a: Point2, b: Point2, p: Point2) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def convex_hull(points: Sequence[Point2]) -> Tuple[int, ...]:
    """Monotone chain hull; returns strict corner indices counterclockwise."""
    order = sorted(range(len(points)), key=lambda index: points[index])
    if len(order) < 3:
        return tuple(order)

    def chain(indices: Sequence[int]) -> List[int]:
        hull: List[int] = []
        for index in indices:
            while len(hull) >= 2 and _cross(points[hull[-2]], points[hull[-1]], points[index]) <= 0:
                hull.pop()
            hull.append(index)
        return hull

    lower = chain(order)
    upper = chain(list(reversed(order)))
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class Triangulation:
    model: GorensteinModel
    triangles: Tuple[Triangle, ...]

    def det(self, triangle: Sequence[int]) -> int:
        points = [self.model.generators[index].coords for index in triangle]
        return determinant(IntMatrix.from_rows(points, 3))

    def canonical(self) -> "Triangulation":
        """Positively oriented triangles, smallest index first, sorted."""
        return Triangulation(self.model, tuple(sorted(_orient(self, triangle) for triangle in self.triangles)))

    def edge_counts(self) -> Counter:
        counts: Counter = Counter()
        for a, b, c in self.triangles:
            for p, q in ((a, b), (b, c), (c, a)):
                counts[_key(p, q)] += 1
        return counts

    def used_points(self) -> Tuple[int, ...]:
        return tuple(sorted({index for triangle in self.triangles for index in triangle}))


def _key(p: int, q: int) -> EdgeKey:
    return (p, q) if p < q else (q, p)


def _orient(triangulation: Triangulation, triangle: Triangle) -> Triangle:
    a, b, c = triangle
    if triangulation.det(triangle) < 0:
        b, c = c, b
    rotations = [(a, b, c), (b, c, a), (c, a, b)]
    return min(rotations, key=lambda item: item[0])


def check_tiling(triangulation: Triangulation) -> None:
    """Raise NOT_TILING unless the triangles tile the polygon."""
    model = triangulation.model
    size = len(model.generators)
    total = 0
    for triangle in triangulation.triangles:
        if len(set(triangle)) != 3 or not all(0 <= index < size for index in triangle):
            raise ToricError(f"triangle {triangle} is malformed", "NOT_TILING")
        area = abs(triangulation.det(triangle))
        if area == 0:
            raise ToricError(f"triangle {triangle} is degenerate", "NOT_TILING")
        total += area
    if total != model.twice_area:
        raise ToricError(f"areas sum to {total}, polygon has {model.twice_area}", "NOT_TILING")
    thirds: Dict[EdgeKey, List[int]] = {}
    for a, b, c in triangulation.triangles:
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            thirds.setdefault(_key(p, q), []).append(r)
    for (p, q), opposite in thirds.items():
        if len(opposite) > 2:
            raise ToricError(f"edge {(p, q)} bounds {len(opposite)} triangles", "NOT_TILING")
        if len(opposite) == 1:
            if not (model.on_boundary(p) and model.on_boundary(q)):
                raise ToricError(f"edge {(p, q)} has one side but is interior", "NOT_TILING")
            continue
        left = triangulation.det((p, q, opposite[0]))
        right = triangulation.det((p, q, opposite[1]))
        if left * right >= 0:
            raise ToricError(f"triangles on edge {(p, q)} overlap", "NOT_TILING")


def normalized_area(triangulation: Triangulation, triangle: Sequence[int]) -> int:
    return abs(triangulation.det(triangle))


def is_unimodular(triangulation: Triangulation) -> bool:
    check_tiling(triangulation)
    return all(normalized_area(triangulation, triangle) == 1 for triangle in triangulation.triangles)


def require_unimodular(triangulation: Triangulation) -> None:
    if not is_unimodular(triangulation):
        raise ToricError("triangulation is not unimodular", "NOT_UNIMODULAR")


def boundary_edges(triangulation: Triangulation) -> Tuple[EdgeKey, ...]:
    return tuple(sorted(key for key, count in triangulation.edge_counts().items() if count == 1))


def interior_edges(triangulation: Triangulation) -> Tuple[EdgeKey, ...]:
    return tuple(sorted(key for key, count in triangulation.edge_counts().items() if count == 2))


def interior_points(triangulation: Triangulation) -> Tuple[int, ...]:
    return tuple(index for index in triangulation.used_points() if not triangulation.model.on_boundary(index))


def flip(triangulation: Triangulation, edge: Sequence[int]) -> Triangulation:
    """Bistellar flip of an interior edge whose quadrilateral is strictly convex."""
    p, q = _key(edge[0], edge[1])
    sides = [triangle for triangle in triangulation.triangles if p in triangle and q in triangle]
    if len(sides) != 2:
        raise ToricError(f"edge {(p, q)} is not an interior edge", "NOT_FLIPPABLE")
    r = next(index for index in sides[0] if index not in (p, q))
    s = next(index for index in sides[1] if index not in (p, q))
    if triangulation.det((r, s, p)) * triangulation.det((r, s, q)) >= 0:
        raise ToricError(f"quadrilateral around {(p, q)} is not strictly convex", "NOT_FLIPPABLE")
    kept = tuple(triangle for triangle in triangulation.triangles if triangle not in sides)
    flipped = Triangulation(triangulation.model, kept + ((p, r, s), (q, r, s)))
    return flipped.canonical()


def flippable_edges(triangulation: Triangulation) -> Tuple[EdgeKey, ...]:
    found = []
    for p, q in interior_edges(triangulation):
        try:
            flip(triangulation, (p, q))
        except ToricError:
            continue
        found.append((p, q))
    return tuple(found)


def unit_triangle() -> Triangulation:
    model = GorensteinModel.of((1, 1, 1), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    return Triangulation(model, ((0, 1, 2),)).canonical()


def c3_z3(subdivided: bool = True) -> Triangulation:
    """The polygon of C^3/Z_3 with its interior point; star subdivision by default."""
    model = GorensteinModel.of((1, 1, 1), [(1, 0, 0), (0, 1, 0), (-1, -1, 3), (0, 0, 1)])
    triangles = ((0, 1, 3), (1, 2, 3), (2, 0, 3)) if subdivided else ((0, 1, 2),)
    return Triangulation(model, triangles).canonical()


def dilated_points(n: int) -> Dict[Tuple[int, int], int]:
    """Index of the point ``(1-b-c, b, c)`` of the n-dilated triangle, keyed by ``(b, c)``."""
    index: Dict[Tuple[int, int], int] = {}
    for b in range(n + 1):
        for c in range(n + 1 - b):
            index[(b, c)] = len(index)
    return index


def dilated_triangle(n: int) -> Triangulation:
    """Standard subdivision of the n-dilated triangle into n^2 unit triangles."""
    if n < 1:
        raise ToricError("dilation must be positive", "SHAPE")
    index = dilated_points(n)
    points = [(1 - b - c, b, c) for (b, c) in index]
    triangles: List[Triangle] = []
    for (b, c), here in index.items():
        if b + c < n:
            triangles.append((here, index[(b + 1, c)], index[(b, c + 1)]))
        if b + c < n - 1:
            triangles.append((index[(b + 1, c)], index[(b + 1, c + 1)], index[(b, c + 1)]))
    model = GorensteinModel.of((1, 1, 1), points)
    return Triangulation(model, tuple(triangles)).canonical()


def grid_triangulation(width: int, height: int, rng: Optional[random.Random] = None) -> Triangulation:
    """Unit squares of a ``width x height`` box, each cut by a diagonal."""
    points = [(x, y, 1) for x in range(width + 1) for y in range(height + 1)]
    at = {(x, y): i for i, (x, y, _) in enumerate(points)}
    triangles: List[Triangle] = []
    for x in range(width):
        for y in range(height):
            a, b, c, d = at[(x, y)], at[(x + 1, y)], at[(x + 1, y + 1)], at[(x, y + 1)]
            if rng is not None and rng.random() < 0.5:
                triangles += [(a, b, d), (b, c, d)]
            else:
                triangles += [(a, b, c), (a, c, d)]
    model = GorensteinModel.of((0, 0, 1), points)
    return Triangulation(model, tuple(triangles)).canonical()


def place_and_flip(rng: random.Random, width: int, height: int, flips: int = 10) -> Triangulation:
    """A random unimodular triangulation: grid placement, then random flips.

    Flipping a convex quadrilateral of two unimodular triangles keeps both
    new triangles unimodular, so the walk stays unimodular.
    """
    current = grid_triangulation(width, height, rng)
    for _ in range(flips):
        candidates = flippable_edges(current)
        if not candidates:
            break
        current = flip(current, rng.choice(candidates))
    logger.debug("generated %dx%d triangulation after %d flips", width, height, flips)
    return current
