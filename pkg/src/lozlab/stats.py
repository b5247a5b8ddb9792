"""Goodness-of-fit helpers used by the verification suites."""

from __future__ import annotations

import numpy as np
from scipy import stats


def ks_normal(values) -> float:
    """Plain Kolmogorov-Smirnov distance to N(0, 1)."""
    return float(stats.kstest(np.asarray(values, dtype=float), "norm").statistic)


def ks_normal_lattice(values, step: float, origin: float) -> float:
    """KS distance to N(0, 1) for data on the lattice origin + step * Z.

    The supremum is taken over the midpoints between lattice points, where
    the empirical CDF of a discretized Gaussian is unbiased to first order.
    Without this correction the jumps of the empirical CDF alone put a floor
    of about step * phi(0) / 2 under the plain KS distance.
    """
    v = np.sort(np.asarray(values, dtype=float))
    j = np.round((v - origin) / step)
    mids = origin + (np.arange(j.min() - 1, j.max() + 1) + 0.5) * step
    ecdf = np.searchsorted(v, mids, side="right") / len(v)
    return float(np.max(np.abs(ecdf - stats.norm.cdf(mids))))


def chi2_uniform_pvalue(counts) -> float:
    counts = np.asarray(counts, dtype=float)
    return float(stats.chisquare(counts).pvalue)


def tv_distance(counts, probs) -> float:
    counts = np.asarray(counts, dtype=float)
    probs = np.asarray(probs, dtype=float)
    return float(0.5 * np.abs(counts / counts.sum() - probs).sum())
