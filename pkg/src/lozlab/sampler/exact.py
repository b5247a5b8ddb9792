"""Exact uniform sampling by downward branching with integer weights."""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate, product

from ..charlib import characters
from ..charlib.characters import box_partitions, schur_dim
from ..charlib.linalg import det_int
from ..tiling import GTPattern
from .rng import RngStream

TABLE_CAP = 10 ** 7


class TooLarge(ValueError):
    """The exact top-row table would exceed its cap."""


def _count_box(m: int, n: int) -> int:
    # partitions in an m x n box: C(m+n, n)
    return characters.binom(m + n, n)


@lru_cache(maxsize=16)
def _top_table(n: int, m: int, cap: int):
    total = _count_box(m, n)
    if total > cap:
        raise TooLarge(
            f"the top-row table for n={n}, m={m} has {total} partitions (cap {cap}); "
            "use mcmc_sample_free instead")
    parts = sorted(box_partitions(m, n), key=lambda p: p[::-1])   # colex
    weights = [schur_dim(p, n) for p in parts]
    return parts, list(accumulate(weights))


def _pick(cum, rng: RngStream) -> int:
    return bisect_right(cum, rng.randbelow(cum[-1]))


def _row_binoms(l: int, size: int):
    return [characters.binom(l, j) for j in range(size)]


def _free_row(hi: int, lo: int, size: int):
    # sum_{l=lo}^{hi-1} C(l, j) = C(hi, j+1) - C(lo, j+1)
    return [characters.binom(hi, j + 1) - characters.binom(lo, j + 1) for j in range(size)]


def _sample_down(row, rng: RngStream) -> tuple:
    """Draw mu interlacing row with probability s_mu(1^{k-1}) / s_row(1^k)."""
    k = len(row)
    if k == 1:
        return ()
    size = k - 1
    l = [v + k - 1 - i for i, v in enumerate(row)]
    chosen = []
    for i in range(size):
        lo, hi = l[i + 1], l[i] - 1
        later = [_free_row(l[t], l[t + 1], size) for t in range(i + 1, size)]
        fixed = [_row_binoms(c, size) for c in chosen]
        cands = list(range(lo, hi + 1))
        if len(cands) == 1:
            chosen.append(cands[0])
            continue
        # rows in decreasing order: every weight carries the sign of a reversed Vandermonde
        sign = -1 if (size * (size - 1) // 2) % 2 else 1
        w = [sign * det_int(fixed + [_row_binoms(v, size)] + later) for v in cands]
        if any(x < 0 for x in w):
            raise ArithmeticError("negative branching weight")
        chosen.append(cands[_pick(list(accumulate(w)), rng)])
    return tuple(c - (size - 1 - i) for i, c in enumerate(chosen))


def downward_weights(row) -> dict:
    """P(next row = mu | row) = s_mu(1^{k-1}) / s_row(1^k) for every interlacing mu."""
    k = len(row)
    if k == 1:
        return {(): Fraction(1)}
    total = schur_dim(row, k)
    ranges = [range(row[i + 1], row[i] + 1) for i in range(k - 1)]
    return {mu: Fraction(schur_dim(mu, k - 1), total) for mu in product(*ranges)}


def _complete(top, m: int, rng: RngStream) -> GTPattern:
    rows = [tuple(top)]
    while len(rows[-1]) > 1:
        rows.append(_sample_down(rows[-1], rng))
    return GTPattern(tuple(reversed(rows)), m)


def exact_sample_free(n: int, m: int, rng: RngStream, cap: int = TABLE_CAP) -> GTPattern:
    """Uniform free-boundary tiling of size (n, m)."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    parts, cum = _top_table(n, m, cap)
    return _complete(parts[_pick(cum, rng)], m, rng)


def exact_sample_hex(n: int, m: int, rng: RngStream) -> GTPattern:
    """Uniform tiling of the hexagon with top row (m^n, 0^n)."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return _complete((m,) * n + (0,) * n, m, rng)
