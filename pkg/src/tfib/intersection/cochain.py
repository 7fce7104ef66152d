"""Simplicial cochains of the 2-skeleton of the 4-simplex over Z/5."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from tfib.intersection.divisors import DEGREE, INDICES
from tfib_experiments.logging import get_logger

logger = get_logger(__name__)

FIELD = GF(DEGREE)

VERTICES: Tuple[Tuple[int, ...], ...] = tuple((i,) for i in INDICES)
EDGES: Tuple[Tuple[int, ...], ...] = tuple(combinations(INDICES, 2))
FACES: Tuple[Tuple[int, ...], ...] = tuple(combinations(INDICES, 3))


@dataclass(frozen=True)
class CochainCheck:
    rank_d0: int
    rank_d1: int
    kernel_d0: int
    kernel_d1: int
    composite_zero: bool

    @property
    def exact(self) -> bool:
        """``im d0 = ker d1``: the first cohomology vanishes."""
        return self.composite_zero and self.rank_d0 == self.kernel_d1

    @property
    def passed(self) -> bool:
        return self.exact and self.kernel_d0 == 1 and self.kernel_d1 == 4

    def as_dict(self) -> Dict[str, object]:
        return {
            "rank_d0": self.rank_d0,
            "rank_d1": self.rank_d1,
            "kernel_d0": self.kernel_d0,
            "kernel_d1": self.kernel_d1,
            "kernel_d1_order": DEGREE**self.kernel_d1,
            "h1_vanishes": self.exact,
        }


def coboundary(source: Sequence[Tuple[int, ...]], target: Sequence[Tuple[int, ...]]) -> DomainMatrix:
    """Matrix of ``d f (s) = sum (-1)^t f(s without vertex t)`` over Z/5."""
    index = {simplex: position for position, simplex in enumerate(source)}
    rows: List[List[object]] = []
    for simplex in target:
        row = [FIELD(0)] * len(source)
        for t in range(len(simplex)):
            face = simplex[:t] + simplex[t + 1 :]
            row[index[face]] += FIELD((-1) ** t)
        rows.append(row)
    return DomainMatrix(rows, (len(target), len(source)), FIELD)


def z5_cochain_check() -> CochainCheck:
    d0 = coboundary(VERTICES, EDGES)
    d1 = coboundary(EDGES, FACES)
    composite = d1 * d0
    check = CochainCheck(
        rank_d0=d0.rank(),
        rank_d1=d1.rank(),
        kernel_d0=len(VERTICES) - d0.rank(),
        kernel_d1=len(EDGES) - d1.rank(),
        composite_zero=bool(composite.to_Matrix().is_zero_matrix),
    )
    logger.info("Z/5 cochains: rank d0 %d, rank d1 %d", check.rank_d0, check.rank_d1)
    return check
