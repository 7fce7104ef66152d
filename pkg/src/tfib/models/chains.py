"""Small Chern chains: the tripod and the theta graph."""

from __future__ import annotations

from typing import Tuple

from tfib.chern import ChainEdge, ChainVertex, ChernChain, fibration_from_chain
from tfib.fibration.graph import LEG, FibrationGraph
from tfib.lattice import LatticeVector

THETA_COEFFS: Tuple[Tuple[int, int], ...] = ((1, 0), (0, 1), (-1, -1))


def tripod_chain() -> ChernChain:
    """One vertex, three legs; the chain of the unit triangle up to basis."""
    edges = tuple(
        ChainEdge(f"e{index}", ("v", LEG), LatticeVector(coeff)) for index, coeff in enumerate(THETA_COEFFS)
    )
    return ChernChain((ChainVertex("v", tuple(edge.id for edge in edges)),), edges)


def theta_chain() -> ChernChain:
    """Two vertices joined by three edges, all oriented from ``u`` to ``w``."""
    edges = tuple(
        ChainEdge(name, ("u", "w"), LatticeVector(coeff)) for name, coeff in zip(("a", "b", "c"), THETA_COEFFS)
    )
    vertices = (ChainVertex("u", ("a", "b", "c")), ChainVertex("w", ("c", "b", "a")))
    return ChernChain(vertices, edges)


def theta_fibration() -> FibrationGraph:
    """The compact fibration over S^3 with discriminant the theta graph."""
    return fibration_from_chain(theta_chain(), base="sphere3")
