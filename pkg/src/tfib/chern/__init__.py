from __future__ import annotations

from .chain import (
    ChainEdge,
    ChainVertex,
    ChernChain,
    chain_from_json,
    chain_to_json,
    coefficient_matrix,
    fibration_from_chain,
    monodromy_from_chain,
    negate_chain,
    validate_chain,
)

__all__ = [
    "ChainEdge",
    "ChainVertex",
    "ChernChain",
    "chain_from_json",
    "chain_to_json",
    "coefficient_matrix",
    "fibration_from_chain",
    "monodromy_from_chain",
    "negate_chain",
    "validate_chain",
]
