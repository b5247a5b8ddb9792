"""Exact first-line sampling and the regime rescalings of particle positions."""

from __future__ import annotations

from bisect import bisect_right
from itertools import accumulate
from math import lcm, sqrt

import numpy as np

from ..charlib.characters import line_one_law
from .rng import RngStream

REGIMES = ("standard", "tall", "wide")


def line_one_weights(n: int, m: int) -> list:
    """Integer weights proportional to P(Y^1 = j), j = 0..m."""
    law = line_one_law(m, n)
    den = lcm(*(p.denominator for p in law))
    return [int(p * den) for p in law]


def sample_line_one(n: int, m: int, size: int, rng: RngStream) -> np.ndarray:
    """``size`` independent exact draws of Y^1 for the free-boundary model."""
    cum = list(accumulate(line_one_weights(n, m)))
    return np.array([bisect_right(cum, rng.randbelow(cum[-1])) for _ in range(size)], dtype=np.int64)


def regime_scale(n: int, m: int, regime: str) -> float:
    """Divisor of the centred positions."""
    if m <= 0:
        raise ValueError("m = 0 is a degenerate scale")
    if regime == "standard":
        a = m / n
        return sqrt(n * (a * a + 2 * a) / 8)
    if regime == "tall":
        return m / sqrt(8 * n)
    if regime == "wide":
        return 2 * sqrt(m)
    raise ValueError(f"unknown regime {regime!r}; choose from {REGIMES}")


def rescale_positions(Y, n: int, m: int, regime: str = "standard") -> np.ndarray:
    """(Y - m/2) / scale elementwise; works on one vector or a stack of them."""
    return (np.asarray(Y, dtype=float) - m / 2) / regime_scale(n, m, regime)
