"""Gelfand-Tsetlin patterns as the data model for lozenge tilings.

Row k of a pattern has k entries (row 1 is the bottom). A free-boundary
tiling of size (n, m) is a depth-n pattern with entries in [0, m]; a hexagon
tiling is a depth-2n pattern whose top row is fixed to (m^n, 0^n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .charlib.characters import (box_partitions, phi_m_count, schur_dim,
                                 skew_schur_dim)
from .charlib.signature import as_signature
from .measures import EmpiricalMeasure

DEFAULT_CAP = 10 ** 7


class CapExceeded(ValueError):
    """Exhaustive enumeration would exceed the configured cap."""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what} has {count} patterns, above the enumeration cap {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class GTPattern:
    rows: tuple
    m: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for k, r in enumerate(rows, start=1):
            if len(r) != k:
                raise ValueError(f"row {k} has {len(r)} entries")
            if any(v < 0 or v > self.m for v in r):
                raise ValueError(f"row {k} leaves [0, {self.m}]")
            if any(a < b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {k} is not weakly decreasing")
        for k in range(len(rows) - 1):
            lo, hi = rows[k], rows[k + 1]
            for i, v in enumerate(lo):
                if not hi[i] >= v >= hi[i + 1]:
                    raise ValueError(f"rows {k + 1} and {k + 2} do not interlace")

    @property
    def depth(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> tuple:
        return self.rows[-1]

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str, m: int | None = None) -> "GTPattern":
        rows = json.loads(text)
        if m is None:
            m = max((max(r) for r in rows if r), default=0)
        return cls(tuple(tuple(r) for r in rows), m)


def from_ssyt(tableau, n: int, m: int | None = None) -> GTPattern:
    """Pattern whose row k is the shape filled by entries <= k."""
    rows = [list(r) for r in tableau if len(r)]
    for r in rows:
        if any(v < 1 or v > n for v in r):
            raise ValueError(f"entries must lie in 1..{n}")
        if any(a > b for a, b in zip(r, r[1:])):
            raise ValueError("rows of an SSYT weakly increase")
    for upper, lower in zip(rows, rows[1:]):
        if len(lower) > len(upper):
            raise ValueError("row lengths must weakly decrease")
        if any(lower[j] <= upper[j] for j in range(len(lower))):
            raise ValueError("columns of an SSYT strictly increase")
    if len(rows) > n:
        raise ValueError(f"more than {n} rows")
    if m is None:
        m = len(rows[0]) if rows else 0
    out = []
    for k in range(1, n + 1):
        shape = [sum(1 for v in r if v <= k) for r in rows]
        shape = (shape + [0] * k)[:k]
        out.append(tuple(shape))
    return GTPattern(tuple(out), m)


def to_ssyt(pattern: GTPattern) -> list:
    """Inverse of from_ssyt: rows of the tableau (empty rows dropped)."""
    top = pattern.top
    tab = [[] for _ in top]
    prev = [0] * len(top)
    for k, row in enumerate(pattern.rows, start=1):
        for i, v in enumerate(row):
            tab[i].extend([k] * (v - prev[i]))
            prev[i] = v
    return [r for r in tab if r]


def positions(pattern: GTPattern, k: int) -> tuple:
    """Y^k_j = y^k_j + k - j."""
    if not 1 <= k <= pattern.depth:
        raise ValueError(f"line {k} outside 1..{pattern.depth}")
    row = pattern.rows[k - 1]
    return tuple(v + k - 1 - j for j, v in enumerate(row))


def count_free(n: int, m: int) -> int:
    """Number of free-boundary tilings, phi_m(1^n)."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return phi_m_count(m, n)


def count_hex(n: int, m: int) -> int:
    return schur_dim((m,) * n + (0,) * n, 2 * n)


def _next_rows(row, m, bounds=None):
    k = len(row)
    ranges = []
    for i in range(k + 1):
        hi = m if i == 0 else row[i - 1]
        lo = 0 if i == k else row[i]
        if bounds is not None:
            lo, hi = max(lo, bounds[i][0]), min(hi, bounds[i][1])
        if lo > hi:
            return
        ranges.append(range(lo, hi + 1))
    # product walks the last coordinate fastest: lexicographic order
    yield from product(*ranges)


def _walk(depth, m, bounds_for):
    def rec(rows):
        k = len(rows)
        if k == depth:
            yield GTPattern(tuple(rows), m)
            return
        prev = rows[-1] if rows else ()
        for r in _next_rows(prev, m, bounds_for(k + 1)):
            rows.append(r)
            yield from rec(rows)
            rows.pop()
    return rec([])


def enumerate_free(n: int, m: int, cap: int = DEFAULT_CAP):
    """Every free-boundary pattern once, lexicographic in the concatenated rows."""
    total = count_free(n, m)
    if total > cap:
        raise CapExceeded(f"free boundary (n={n}, m={m})", total, cap)
    return _walk(n, m, lambda k: None)


def enumerate_hex(n: int, m: int, cap: int = DEFAULT_CAP):
    """Every depth-2n pattern with top row (m^n, 0^n), lexicographic."""
    total = count_hex(n, m)
    if total > cap:
        raise CapExceeded(f"hexagon (n={n}, m={m})", total, cap)
    top = (m,) * n + (0,) * n
    N = 2 * n

    def bounds(k):
        # an entry mu_i of row k is completable iff top_{i+N-k} <= mu_i <= top_i
        return [(top[i + N - k], top[i]) for i in range(k)]
    return _walk(N, m, bounds)


def row_count(n: int, m: int, y) -> int:
    """Number of free patterns whose row k = len(y) equals y.

    s_y(1^k) completions below times sum over boxed lambda of s_{lambda/y}(1^{n-k}).
    """
    y = tuple(y)
    k = len(y)
    below = schur_dim(y, k)
    above = sum(skew_schur_dim(lam, y, n - k) for lam in box_partitions(m, n))
    return below * above


def profile_eval(lam, x):
    """The profile w_lambda(x) tracing the border of the rotated diagram."""
    parts = list(as_signature(lam).parts)
    N = len(parts)
    if N == 0:
        return x
    if x >= parts[0]:
        return x
    if x <= parts[-1] - N:
        return x + 2 * N
    for i in range(1, N + 1):
        li = parts[i - 1]
        # rising piece on [lambda_i - i + 1, lambda_{i-1} - i + 1]
        if i > 1 and li - i + 1 <= x <= parts[i - 2] - i + 1:
            return 2 * (i - 1) + x
        if li - i <= x <= li - i + 1:
            return 2 * li - x
    raise AssertionError("profile cases do not cover x")


def counting_measure(lam) -> EmpiricalMeasure:
    """m[lambda] = (1/N) sum_i delta((lambda_i + N - i)/N)."""
    sig = as_signature(lam)
    if not sig.is_integral:
        raise ValueError("counting measure needs integer parts")
    parts = sig.int_parts()
    N = len(parts)
    return EmpiricalMeasure.uniform(Fraction(p + N - 1 - i, N) for i, p in enumerate(parts))
