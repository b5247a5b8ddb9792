"""Limit-shape moments via jets of Psi_a, and empirical moments of tilings.

With c = a/4 and h(u) = ((u+1) + sqrt((u+1)^2 + (a^2+2a)(u-1)^2)) / 4,

    Psi_a(u) = (a/2) ln u + 2 L(u),
    L = (c+1/2) ln(h - c(u-1)) - (c+1) ln(h - (c+1/2)(u-1))
        - c ln(h + (c+1/2)(u-1)) + (c-1/2) ln(h + c(u-1)),

the limit of (1/n) ln Phi_m(u; n) as m/n -> a.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, floor

import mpmath as mp
import numpy as np

from .charlib.jet import JET_BITS, MAX_ORDER, Jet
from .sampler.mcmc import ChainRows, batch_means_se
from .tiling import GTPattern

DEFAULT_ORDER = 12


def _log_terms(a, u, h, ln):
    c = a / 4
    d = u - 1
    return ((c + 0.5) * ln(h - c * d) - (c + 1) * ln(h - (c + 0.5) * d)
            - c * ln(h + (c + 0.5) * d) + (c - 0.5) * ln(h + c * d))


def psi_jet(a, order: int = DEFAULT_ORDER) -> Jet:
    """Taylor jet of Psi_a at u = 1."""
    if order > MAX_ORDER:
        raise ValueError(f"order {order} exceeds the cap {MAX_ORDER}")
    if order < 1:
        raise ValueError("order must be positive")
    with mp.workprec(JET_BITS):
        a = mp.mpf(a)
        if a <= 0:
            raise ValueError("a must be positive")
        u = Jet.variable(order)
        h = ((u + 1) + ((u + 1) ** 2 + (a * a + 2 * a) * (u - 1) ** 2).sqrt()) / 4
        L = _log_terms(a, u, h, lambda j: j.ln())
        psi = u.ln() * (a / 2) + L * 2
    # Psi_a(1) = 0 exactly; drop the rounding residue of the four logs
    return Jet([0] + list(psi.coeffs[1:]))


def h_value(a, u):
    a, u = mp.mpf(a), mp.mpf(u)
    return ((u + 1) + mp.sqrt((u + 1) ** 2 + (a * a + 2 * a) * (u - 1) ** 2)) / 4


def psi_value(a, u):
    """Direct evaluation of Psi_a(u) at the current mpmath precision."""
    a, u = mp.mpf(a), mp.mpf(u)
    return a / 2 * mp.log(u) + 2 * _log_terms(a, u, h_value(a, u), mp.log)


def limit_moment(r: int, x, a, order: int | None = None):
    """int t^r M(dt) for the limit measure of line fraction x and aspect ratio a."""
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return mp.mpf(1)
    order = max(r + 1, DEFAULT_ORDER) if order is None else order
    if r > order - 1:
        raise ValueError(f"moment {r} needs a jet of order >= {r + 1}")
    dpsi = psi_jet(a, order).derivative().truncate(r)
    with mp.workprec(JET_BITS):
        x = mp.mpf(x)
        u = Jet.variable(r)
        total = mp.mpf(0)
        for ell in range(r + 1):
            g = u ** r * dpsi ** (r - ell)
            total += comb(r, ell) * mp.mpf(factorial(ell)) / factorial(ell + 1) \
                * x ** (ell - r) * g.coeffs[ell]
    return +total


# --------------------------------------------------------------------------
# empirical side


@dataclass
class MomentAccumulator:
    """Per-sample moment values; merge by concatenation, SE by batch means or iid."""

    r_max: int
    values: list = field(default_factory=list)

    def add_row(self, row, N: int):
        atoms = (np.asarray(row, dtype=float) + N - 1 - np.arange(N)) / N
        self.values.append([np.mean(atoms ** r) for r in range(self.r_max + 1)])

    def add_rows(self, rows: np.ndarray):
        rows = np.asarray(rows, dtype=float)
        N = rows.shape[1]
        atoms = (rows + (N - 1 - np.arange(N))[None, :]) / N
        self.values.extend(np.stack([np.mean(atoms ** r, axis=1)
                                     for r in range(self.r_max + 1)], axis=1).tolist())

    def merge(self, other: "MomentAccumulator") -> "MomentAccumulator":
        if other.r_max != self.r_max:
            raise ValueError("accumulators disagree on r_max")
        return MomentAccumulator(self.r_max, self.values + other.values)

    def result(self, line_fraction, a=None, correlated: bool = False) -> "MomentVector":
        if not self.values:
            raise ValueError("no samples")
        v = np.asarray(self.values)
        if correlated:
            se = [batch_means_se(v[:, r]) if r else 0.0 for r in range(self.r_max + 1)]
        else:
            se = list(v.std(axis=0, ddof=1) / np.sqrt(len(v))) if len(v) > 1 else [np.nan] * (self.r_max + 1)
            se[0] = 0.0
        means = list(v.mean(axis=0))
        means[0] = 1.0
        return MomentVector(tuple(means), tuple(float(s) for s in se), line_fraction, a, len(v))


@dataclass(frozen=True)
class MomentVector:
    values: tuple
    stderr: tuple
    line_fraction: object
    a: object
    samples: int

    def __getitem__(self, r):
        return self.values[r]


def line_index(line_fraction, n: int) -> int:
    """k = floor(line_fraction * n), computed exactly.

    Floats are read through their shortest decimal form, so 0.7 means 7/10.
    """
    q = Fraction(repr(line_fraction)) if isinstance(line_fraction, float) else Fraction(line_fraction)
    k = floor(q * n)
    if k < 1:
        raise ValueError(f"line fraction {line_fraction} gives k = {k} < 1 at n = {n}")
    return k


def _moments(samples, line_fraction, r_max, n_of, correlated):
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    acc = MomentAccumulator(r_max)
    if isinstance(samples, ChainRows):
        n = n_of(samples.depth)
        k = line_index(line_fraction, n)
        acc.add_rows(samples.rows[k])
        correlated = True
    else:
        for p in samples:
            if not isinstance(p, GTPattern):
                raise TypeError("samples must be GTPatterns or ChainRows")
            k = line_index(line_fraction, n_of(p.depth))
            acc.add_row(p.rows[k - 1], k)
    if not acc.values:
        raise ValueError("empty sample stream")
    return acc.result(line_fraction, correlated=correlated)


def empirical_moments(samples, line_fraction, r_max: int, correlated: bool = False) -> MomentVector:
    """Moments of m[row k], k = floor(line_fraction * n), averaged over free-boundary samples."""
    return _moments(samples, line_fraction, r_max, lambda depth: depth, correlated)


def hexagon_moments(samples, line_fraction, r_max: int, correlated: bool = False) -> MomentVector:
    """As empirical_moments for hexagon patterns of depth 2n (line index uses n)."""
    return _moments(samples, line_fraction, r_max, lambda depth: depth // 2, correlated)
