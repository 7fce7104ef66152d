"""Error types shared across the toolkit.

Every error is a ``ValueError`` carrying a short machine-readable ``code``.
"""

from __future__ import annotations


class TfibError(ValueError):
    """Base error with a machine-readable code."""

    default_code = "ERROR"

    def __init__(self, message: str, code: str | None = None) -> None:
        super().__init__(message)
        self.code = code or self.default_code

    def __str__(self) -> str:
        return f"[{self.code}] {super().__str__()}"


class LatticeError(TfibError):
    default_code = "LATTICE"


class MonodromyError(TfibError):
    default_code = "MONODROMY"


class FibrationError(TfibError):
    default_code = "INVALID_GRAPH"


class ChainError(TfibError):
    default_code = "INVALID_CHAIN"


class ToricError(TfibError):
    default_code = "TORIC"


class QuinticError(TfibError):
    default_code = "QUINTIC"


class IntersectionError(TfibError):
    default_code = "INCONSISTENT"
