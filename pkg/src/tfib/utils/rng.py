"""Randomness utilities for deterministic property checks."""

from __future__ import annotations

import random

from tfib.lattice import IntMatrix, identity


def make_rng(seed: int) -> random.Random:
    """Create a dedicated RNG seeded for deterministic behavior."""
    return random.Random(seed)


def random_unimodular(rng: random.Random, n: int, steps: int = 8, bound: int = 2) -> IntMatrix:
    """A random element of SL(n, Z) built from elementary row additions."""
    rows = [list(row) for row in identity(n).rows]
    for _ in range(steps):
        target, source = rng.sample(range(n), 2)
        factor = rng.choice([k for k in range(-bound, bound + 1) if k])
        rows[target] = [a + factor * b for a, b in zip(rows[target], rows[source])]
    return IntMatrix.from_rows(rows, n)


def random_matrix(rng: random.Random, nrows: int, ncols: int, low: int = -9, high: int = 9) -> IntMatrix:
    return IntMatrix.from_rows([[rng.randint(low, high) for _ in range(ncols)] for _ in range(nrows)], ncols)
