"""GUE-corners process: matrix sampling, minor eigenvalues, density and MGF.

Convention: diagonal entries are N(0, 1); off-diagonal entries have
independent real and imaginary parts of variance 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, pi, sqrt

import numba
import numpy as np

from .charlib.bessel import bessel_B_batch
from .sampler.rng import RngStream

JACOBI_MAX_SWEEPS = 100
JACOBI_TOL = 1e-14


class EigenError(RuntimeError):
    """The Jacobi eigensolver did not converge."""


@dataclass(frozen=True)
class CornersSample:
    """levels[j-1] holds the decreasing eigenvalues of the j x j corner."""

    levels: tuple

    @property
    def k(self) -> int:
        return len(self.levels)

    def interlacing_violations(self, slack: float = 1e-10) -> int:
        bad = 0
        for j in range(1, self.k):
            lo, hi = self.levels[j - 1], self.levels[j]
            for i in range(j):
                if not (hi[i] + slack >= lo[i] >= hi[i + 1] - slack):
                    bad += 1
        return bad


@numba.njit(cache=True)
def _jacobi_eigvals(A, tol, max_sweeps):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations."""
    a = A.copy()
    k = a.shape[0]
    scale = 0.0
    for i in range(k):
        for j in range(k):
            scale += abs(a[i, j]) ** 2
    scale = np.sqrt(scale)
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(k):
            for j in range(i + 1, k):
                off += abs(a[i, j]) ** 2
        if np.sqrt(off) <= tol * scale or off == 0.0:
            ev = np.empty(k)
            for i in range(k):
                ev[i] = a[i, i].real
            return np.sort(ev)[::-1].copy(), sweep
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                # rotate the phase of a[p, q] away: a <- D^H a D, D_qq = conj(phase)
                ph = apq / mag
                for r in range(k):
                    a[r, q] = a[r, q] * np.conj(ph)
                for r in range(k):
                    a[q, r] = a[q, r] * ph
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for r in range(k):
                    arp = a[r, p]
                    arq = a[r, q]
                    a[r, p] = c * arp - s * arq
                    a[r, q] = s * arp + c * arq
                for r in range(k):
                    apr = a[p, r]
                    aqr = a[q, r]
                    a[p, r] = c * apr - s * aqr
                    a[q, r] = s * apr + c * aqr
                a[p, q] = 0.0
                a[q, p] = 0.0
    return np.empty(0), -1


def eigvals_hermitian(A) -> np.ndarray:
    """Decreasing eigenvalues of a Hermitian matrix (Jacobi, 1e-14 relative off-diagonal)."""
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(A, A.conj().T, rtol=0, atol=1e-12 * max(1.0, np.abs(A).max())):
        raise ValueError("matrix is not Hermitian")
    if A.shape[0] == 1:
        return np.array([A[0, 0].real])
    ev, sweeps = _jacobi_eigvals(A, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise EigenError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return ev


def gue_matrix(k: int, rng: RngStream) -> np.ndarray:
    if k < 1:
        raise ValueError("k must be positive")
    z = rng.normal(k + k * (k - 1))
    A = np.diag(z[:k]).astype(np.complex128)
    iu = np.triu_indices(k, 1)
    off = (z[k:k + len(iu[0])] + 1j * z[k + len(iu[0]):]) * sqrt(0.5)
    A[iu] = off
    A[(iu[1], iu[0])] = np.conj(off)
    return A


def corners_of(A) -> CornersSample:
    k = A.shape[0]
    return CornersSample(tuple(eigvals_hermitian(A[:j, :j]) for j in range(1, k + 1)))


def sample_gue_corners(k: int, rng: RngStream) -> CornersSample:
    """Eigenvalues of all leading principal submatrices of one GUE_k draw."""
    return corners_of(gue_matrix(k, rng))


@numba.njit(cache=True)
def _batch_corners(mats, tol, max_sweeps):
    S, k = mats.shape[0], mats.shape[1]
    out = np.empty((S, k * (k + 1) // 2))
    for s in range(S):
        pos = 0
        for j in range(1, k + 1):
            if j == 1:
                out[s, pos] = mats[s, 0, 0].real
            else:
                ev, sweeps = _jacobi_eigvals(mats[s, :j, :j], tol, max_sweeps)
                if sweeps < 0:
                    return out, s
                out[s, pos:pos + j] = ev
            pos += j
    return out, -1


def sample_gue_corners_batch(k: int, samples: int, rng: RngStream) -> list:
    """``samples`` independent draws; returns [level_1 (S,1), ..., level_k (S,k)].

    Matrices follow the convention of gue_matrix but are generated in one block,
    so the stream differs from repeated sample_gue_corners calls.
    """
    if k < 1 or samples < 1:
        raise ValueError("k and samples must be positive")
    z = rng.normal((samples, k * k))
    mats = np.zeros((samples, k, k), dtype=np.complex128)
    d = np.arange(k)
    mats[:, d, d] = z[:, :k]
    iu = np.triu_indices(k, 1)
    npair = len(iu[0])
    off = (z[:, k:k + npair] + 1j * z[:, k + npair:]) * sqrt(0.5)
    mats[:, iu[0], iu[1]] = off
    mats[:, iu[1], iu[0]] = np.conj(off)
    flat, bad = _batch_corners(mats, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    if bad >= 0:
        raise EigenError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (draw {bad})")
    out, pos = [], 0
    for j in range(1, k + 1):
        out.append(flat[:, pos:pos + j].copy())
        pos += j
    return out


def gue_normalization(k: int) -> float:
    """Z with integral over R^k of Delta^2 exp(-|e|^2/2) equal to Z."""
    z = (2 * pi) ** (k / 2)
    for j in range(1, k + 1):
        z *= factorial(j)
    return z


def gue_density(k: int, eps) -> float:
    """Symmetric eigenvalue density Delta(e)^2 exp(-sum e^2 / 2) / Z on R^k."""
    e = np.asarray(eps, dtype=float)
    if e.shape[-1] != k:
        raise ValueError("eps must have length k")
    d = np.ones(e.shape[:-1])
    for i in range(k):
        for j in range(i + 1, k):
            d = d * (e[..., i] - e[..., j]) ** 2
    return d * np.exp(-0.5 * np.sum(e * e, axis=-1)) / gue_normalization(k)


def mgf_gue(x, k: int | None = None) -> float:
    """E B_k(x; GUE_k) = exp(sum x^2 / 2)."""
    x = np.asarray(x, dtype=float)
    if k is not None and len(x) != k:
        raise ValueError("k must equal the length of x")
    return float(np.exp(0.5 * np.sum(x * x)))


def mgf_gue_mc(x, k: int, samples: int, rng: RngStream, levels=None):
    """Monte Carlo mean of B_k(x; e^k) over GUE corners; returns (estimate, SE).

    ``levels`` may pass a precomputed top-level array (S, k) to reuse draws.
    """
    if len(x) != k:
        raise ValueError("k must equal the length of x")
    if levels is None:
        levels = sample_gue_corners_batch(k, samples, rng)[k - 1]
    vals = bessel_B_batch(x, levels)
    return float(vals.mean()), float(vals.std(ddof=1) / np.sqrt(len(vals)))
