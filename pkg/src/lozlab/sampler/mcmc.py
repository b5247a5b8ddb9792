"""Heat-bath Glauber dynamics on Gelfand-Tsetlin patterns.

One sweep visits every free entry once in a fresh uniformly random order and
redraws it uniformly from the integer interval allowed by its neighbours.
Free-boundary chains update the top row as well; hexagon chains keep it fixed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numba
import numpy as np

from ..tiling import GTPattern
from .rng import RngStream


@dataclass
class SamplerReport:
    samples: int
    burn_in: int
    sweeps: int
    thin: int
    updates: int
    wall_time: float
    chains: int = 1
    diagnostics: dict = field(default_factory=dict)

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "samples": self.samples, "burn_in": self.burn_in, "sweeps": self.sweeps,
            "thin": self.thin, "updates": self.updates, "chains": self.chains,
            "wall_time": round(self.wall_time, 3) if timing else 0.0, "diagnostics": self.diagnostics,
        }


@numba.njit(cache=True)
def _sweep(state, depth, m, coords_k, coords_j):
    E = coords_k.shape[0]
    order = np.random.permutation(E)
    for t in range(E):
        e = order[t]
        k = coords_k[e]
        j = coords_j[e]
        lo = 0
        hi = m
        if k >= 1:
            if j <= k - 1:
                lo = max(lo, state[k - 1, j])
            if j >= 1:
                hi = min(hi, state[k - 1, j - 1])
        if k + 1 < depth:
            lo = max(lo, state[k + 1, j + 1])
            hi = min(hi, state[k + 1, j])
        if hi > lo:
            state[k, j] = lo + np.random.randint(0, hi - lo + 1)
        else:
            state[k, j] = lo
    return E


@numba.njit(cache=True)
def _run(state, depth, m, coords_k, coords_j, burn_in, samples, thin, keep, seed):
    np.random.seed(seed)
    total_keep = 0
    for r in range(keep.shape[0]):
        total_keep += keep[r] + 1
    out = np.empty((samples, total_keep), dtype=np.int32)
    updates = 0
    for _ in range(burn_in):
        updates += _sweep(state, depth, m, coords_k, coords_j)
    for s in range(samples):
        for _ in range(thin):
            updates += _sweep(state, depth, m, coords_k, coords_j)
        c = 0
        for r in range(keep.shape[0]):
            k = keep[r]
            for j in range(k + 1):
                out[s, c] = state[k, j]
                c += 1
    return out, updates


@dataclass
class ChainRows:
    """Recorded rows of a chain: ``rows[k]`` is an (S, k) array of row k."""

    depth: int
    m: int
    rows: dict

    @property
    def samples(self) -> int:
        return next(iter(self.rows.values())).shape[0]

    def positions(self, k: int) -> np.ndarray:
        """Y^k for every sample: row k plus the staircase."""
        return self.rows[k] + np.arange(k - 1, -1, -1)[None, :]

    def patterns(self):
        if len(self.rows) != self.depth:
            raise ValueError("only chains that recorded every row yield patterns")
        for s in range(self.samples):
            yield GTPattern(tuple(tuple(int(v) for v in self.rows[k][s])
                                  for k in range(1, self.depth + 1)), self.m)

    @classmethod
    def concat(cls, parts) -> "ChainRows":
        parts = list(parts)
        keys = parts[0].rows.keys()
        return cls(parts[0].depth, parts[0].m,
                   {k: np.concatenate([p.rows[k] for p in parts]) for k in keys})


def default_burn_in(n: int, m: int) -> int:
    return 10 * (n + m) ** 2


def _initial(depth: int, m: int, top):
    state = np.zeros((depth, depth), dtype=np.int64)
    if top is not None:
        N = depth
        for k in range(1, depth + 1):
            for i in range(k):
                # lowest completion: mu_i = top_{i+N-k}
                state[k - 1, i] = top[i + N - k]
    return state


def _coords(depth: int, free_top: bool):
    ks, js = [], []
    last = depth if free_top else depth - 1
    for k in range(last):
        for j in range(k + 1):
            ks.append(k)
            js.append(j)
    return np.array(ks, dtype=np.int64), np.array(js, dtype=np.int64)


def run_chain(depth: int, m: int, rng: RngStream, samples: int, burn_in: int, thin: int,
              top=None, keep_rows=None):
    """One chain; returns (ChainRows, updates)."""
    if samples <= 0 or thin <= 0 or burn_in < 0:
        raise ValueError("samples and thin must be positive, burn_in non-negative")
    keep = list(range(1, depth + 1)) if keep_rows is None else sorted(set(keep_rows))
    if any(not 1 <= k <= depth for k in keep):
        raise ValueError("kept rows must lie in 1..depth")
    state = _initial(depth, m, top)
    ck, cj = _coords(depth, top is None)
    keep_arr = np.array([k - 1 for k in keep], dtype=np.int64)
    if ck.shape[0] == 0:
        out = np.tile(np.concatenate([state[k - 1, :k] for k in keep]), (samples, 1)).astype(np.int32)
        updates = 0
    else:
        out, updates = _run(state, depth, m, ck, cj, burn_in, samples, thin, keep_arr, rng.uint32())
    rows, c = {}, 0
    for k in keep:
        rows[k] = out[:, c:c + k]
        c += k
    return ChainRows(depth, m, rows), int(updates)


def batch_means_se(x, batches: int = 20) -> float:
    """Standard error of the mean of a correlated series by batch means."""
    x = np.asarray(x, dtype=float)
    b = min(batches, len(x))
    if b < 2:
        return float("nan")
    means = np.array([c.mean() for c in np.array_split(x, b)])
    return float(means.std(ddof=1) / np.sqrt(b))


def _mcmc(depth, n, m, rng, samples, burn_in, thin, top, keep_rows, chains):
    t0 = time.perf_counter()
    burn_in = default_burn_in(n, m) if burn_in is None else burn_in
    thin = n if thin is None else thin
    if samples <= 0 or thin <= 0:
        raise ValueError("samples and thin must be positive")
    keep = None if keep_rows is None else sorted(set(keep_rows) | {1})
    per = [samples // chains + (1 if c < samples % chains else 0) for c in range(chains)]
    parts, updates = [], 0
    for c, s in enumerate(per):
        if s == 0:
            continue
        rows, u = run_chain(depth, m, rng.child(c), s, burn_in, thin, top, keep)
        parts.append(rows)
        updates += u
    res = ChainRows.concat(parts)
    diag = {}
    if len(parts) >= 2:
        y1 = [p.positions(1)[:, 0].astype(float) for p in parts[:2]]
        gap = float(y1[0].mean() - y1[1].mean())
        se = float(np.hypot(batch_means_se(y1[0]), batch_means_se(y1[1])))
        diag = {"y1_mean_gap": gap, "y1_gap_se": se,
                "two_chain_ok": bool(abs(gap) < 2 * se) if se > 0 else gap == 0}
    report = SamplerReport(samples, burn_in, burn_in * len(parts) + samples * thin, thin, updates,
                           time.perf_counter() - t0, len(parts), diag)
    return res, report


def mcmc_sample_free(n: int, m: int, rng: RngStream, samples: int, burn_in: int | None = None,
                     thin: int | None = None, keep_rows=None, chains: int = 2):
    """Free-boundary chain(s). Returns (ChainRows, SamplerReport).

    ``samples`` patterns are split across ``chains`` independent chains; the
    report carries the two-chain mean gap of Y^1.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return _mcmc(n, n, m, rng, samples, burn_in, thin, None, keep_rows, chains)


def mcmc_sample_hex(n: int, m: int, rng: RngStream, samples: int, burn_in: int | None = None,
                    thin: int | None = None, keep_rows=None, chains: int = 2):
    """Hexagon chain(s) with the top row fixed to (m^n, 0^n)."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    top = (m,) * n + (0,) * n
    return _mcmc(2 * n, n, m, rng, samples, burn_in, thin, top, keep_rows, chains)
