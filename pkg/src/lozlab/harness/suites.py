"""Verification suites: exact identities, GUE convergence, MGF asymptotics, limit shape."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import sqrt

import mpmath as mp
import numpy as np

from .. import gue, stats, tiling
from ..charlib import characters as ch
from ..charlib.precision import rel_diff
from ..charlib.signature import Signature
from ..limitshape import empirical_moments, hexagon_moments, limit_moment, line_index
from ..sampler import (RngStream, batch_means_se, exact_sample_free, exact_sample_hex,
                       mcmc_sample_free, mcmc_sample_hex, regime_scale, sample_line_one)
from ..sampler.exact import downward_weights
from .report import SuiteReport

EBK_BITS = 256
EBK_TOL = 1e-9


# --------------------------------------------------------------------------
# regimes


@dataclass(frozen=True)
class RegimeSpec:
    regime: str
    n: int
    m: int
    a: float | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m = 0 is a degenerate scale")
        if self.regime == "standard":
            a = self.m / self.n if self.a is None else self.a
            object.__setattr__(self, "a", a)
            if abs(self.m / self.n - a) > 0.2 * a:
                raise ValueError(f"m/n = {self.m / self.n:.3g} is not within 20% of a = {a}")
        elif self.regime == "tall":
            if self.n ** 2 > self.m:
                raise ValueError("the tall regime needs n^2 <= m")
        elif self.regime == "wide":
            if self.m ** 2 > self.n:
                raise ValueError("the wide regime needs m^2 <= n")
        else:
            raise ValueError(f"unknown regime {self.regime!r}")

    @property
    def scale(self) -> float:
        return regime_scale(self.n, self.m, self.regime)


# --------------------------------------------------------------------------
# exact MGF identity


@lru_cache(maxsize=64)
def position_law(n: int, m: int, k: int):
    """Counter of Y^k over all free-boundary tilings, and their total."""
    c = Counter(tiling.positions(p, k) for p in tiling.enumerate_free(n, m))
    return tuple(sorted(c.items())), sum(c.values())


def _vandermonde_ratio(t):
    """prod_{i<j} (e^{t_i} - e^{t_j}) / (t_i - t_j), with e^{t_i} on coincidences."""
    out = mp.mpf(1)
    for i, j in combinations(range(len(t)), 2):
        out *= mp.exp(t[i]) if t[i] == t[j] else (mp.exp(t[i]) - mp.exp(t[j])) / (t[i] - t[j])
    return out


def ebk_sides(n: int, m: int, x):
    """(LHS, printed RHS, Vandermonde-corrected RHS) at the current precision."""
    k = len(x)
    xs = [mp.mpf(Fraction(str(v)).numerator) / Fraction(str(v)).denominator for v in x]
    law, total = position_law(n, m, k)
    rn = mp.sqrt(n)
    lhs = mp.mpf(0)
    for Y, c in law:
        y = [(Yj - mp.mpf(m) / 2) / rn for Yj in Y]
        lhs += c * ch.bessel_B(xs, y)
    lhs /= total
    t = [v / rn for v in xs]
    pref = mp.exp(-m * mp.fsum(xs) / (2 * rn))
    phi = ch.Phi_m_eval(m, [mp.exp(v) for v in t], n) if any(t) else 1
    printed = pref * phi
    return lhs, printed, printed * _vandermonde_ratio(t)


def verify_ebk_identity(n: int, m: int, k: int, x, bits: int = EBK_BITS, tol: float = EBK_TOL) -> SuiteReport:
    """Exact expectation of B_k(x; (Y^k - m/2)/sqrt n) against Phi_m.

    Two right-hand sides are checked: the bare prefactor times Phi_m, and the
    same times prod (e^{x_i/sqrt n} - e^{x_j/sqrt n}) / ((x_i - x_j)/sqrt n),
    the factor relating the Bessel function to the Schur ratio.
    """
    if len(x) != k:
        raise ValueError("x must have length k")
    if not (1 <= k <= n):
        raise ValueError("need 1 <= k <= n")
    if tiling.count_free(n, m) > 10 ** 6 or n > 4 or m > 4:
        raise ValueError(f"enumeration for n={n}, m={m} is outside the supported range (n, m <= 4)")
    rep = SuiteReport("ebk_identity")
    inputs = {"n": n, "m": m, "k": k, "x": list(x), "bits": bits}
    with mp.workprec(bits):
        lhs, printed, corrected = ebk_sides(n, m, x)
        d1, d2 = rel_diff(lhs, printed), rel_diff(lhs, corrected)
    rep.add("printed_rhs", inputs, printed, lhs, tol, d1 <= tol)
    rep.add("vandermonde_corrected_rhs", inputs, corrected, lhs, tol, d2 <= tol)
    rep.diagnostics = {"rel_diff_printed": d1, "rel_diff_corrected": d2}
    return rep.finish()


# --------------------------------------------------------------------------
# GUE convergence


def _positions(domain, spec, k, samples, rng, method, burn_in, thin):
    """Return ([Y^1 (S,1), ..., Y^k (S,k)], correlated flag, sampler report dict)."""
    n, m = spec.n, spec.m
    if method == "auto":
        method = "mcmc" if spec.regime == "standard" or k > 1 or domain == "hexagon" else "line"
    if method == "line":
        if k != 1 or domain != "free":
            raise ValueError("the exact line-one sampler covers k = 1 on the free domain only")
        return [sample_line_one(n, m, samples, rng)[:, None]], False, {"method": "line"}
    if method == "exact":
        draw = exact_sample_free if domain == "free" else exact_sample_hex
        pats = [draw(n, m, rng) for _ in range(samples)]
        return [np.array([tiling.positions(p, j) for p in pats]) for j in range(1, k + 1)], False, {"method": "exact"}
    if method == "mcmc":
        run = mcmc_sample_free if domain == "free" else mcmc_sample_hex
        rows, report = run(n, m, rng, samples, burn_in, thin, keep_rows=range(1, k + 1))
        info = {"method": "mcmc", **report.as_dict()}
        return [rows.positions(j) for j in range(1, k + 1)], True, info
    raise ValueError(f"unknown method {method!r}")


def verify_gue_convergence(spec: RegimeSpec, k: int, samples: int, rng: RngStream,
                           method: str = "auto", domain: str = "free", ks_tol: float | None = None,
                           burn_in: int | None = None, thin: int | None = None,
                           gue_samples: int | None = None) -> SuiteReport:
    """Rescaled lozenge positions on lines 1..k against the GUE-corners process."""
    if domain not in ("free", "hexagon"):
        raise ValueError("domain must be free or hexagon")
    ks_tol = (0.05 if spec.regime == "standard" else 0.06) if ks_tol is None else ks_tol
    rep = SuiteReport(f"gue_convergence_{spec.regime}", seed=rng.seed)
    levels, correlated, info = _positions(domain, spec, k, samples, rng.child(0), method, burn_in, thin)
    scale = spec.scale
    resc = [(Y - spec.m / 2) / scale for Y in levels]
    inputs = {"regime": spec.regime, "n": spec.n, "m": spec.m, "k": k, "samples": samples,
              "domain": domain, "scale": scale}

    y1 = resc[0][:, 0]
    ks = stats.ks_normal_lattice(y1, 1 / scale, -spec.m / 2 / scale)
    rep.add("ks_y1_vs_normal", inputs, 0.0, ks, ks_tol, ks <= ks_tol)

    se_fn = batch_means_se if correlated else (lambda v: float(np.std(v, ddof=1) / sqrt(len(v))))
    ref = gue.sample_gue_corners_batch(k, gue_samples or min(samples, 20000), rng.child(1))
    diag = {"sampler": info, "ks_plain": stats.ks_normal(y1), "lattice_step": 1 / scale, "levels": []}
    for j in range(1, k + 1):
        lm = resc[j - 1].mean(axis=1)
        mean, se = float(lm.mean()), se_fn(lm)
        rep.add(f"level_{j}_mean", inputs, 0.0, mean, f"3*SE={3 * se:.4g}", abs(mean) <= 3 * se)
        # the exact reflection symmetry centres level j at (m + j - 1)/2
        shifted = (levels[j - 1].mean(axis=1) - (spec.m + j - 1) / 2) / scale
        g = ref[j - 1]
        diag["levels"].append({
            "level": j, "mean": mean, "se": se,
            "mean_about_reflection_centre": float(shifted.mean()), "se_about_reflection_centre": se_fn(shifted),
            "var_entries": float(resc[j - 1].var()), "gue_var_entries": float(g.var()),
            "var_gap": float(resc[j - 1].var() - g.var()), "gue_level_mean": float(g.mean(axis=1).mean()),
        })
    viol = 0
    for j in range(1, k):
        lo, hi = resc[j - 1], resc[j]
        viol += int(np.sum(~((hi[:, :j] >= lo) & (lo >= hi[:, 1:]))))
    rep.add("interlacing_violations", inputs, 0, viol, 0, viol == 0)
    if spec.regime == "wide":
        alt = np.sqrt(spec.m) / 2
        diag["ks_with_divisor_sqrt_m_over_2"] = stats.ks_normal_lattice(
            (levels[0][:, 0] - spec.m / 2) / alt, 1 / alt, -spec.m / 2 / alt)
        diag["y1_sample_variance"] = float(levels[0][:, 0].var())
    rep.diagnostics = diag
    return rep.finish()


# --------------------------------------------------------------------------
# MGF asymptotics


def mgf_exponent(m: int, n: int, y):
    """ln Phi_m(e^{y_i/sqrt n}; n) - m/(2 sqrt n) sum y_i."""
    rn = mp.sqrt(n)
    xs = [mp.exp(mp.mpf(v) / rn) for v in y]
    if len(y) == 1:
        val = ch.Phi_m_univariate(m, xs[0], n)
    else:
        val = ch.Phi_m_eval(m, xs, n, method="phi")
    return mp.log(val) - m * mp.fsum(mp.mpf(v) for v in y) / (2 * rn)


def verify_mgf_convergence(a, n_grid, y, tol: float = 0.02, bits: int = 128) -> SuiteReport:
    """Drift-corrected ln Phi_m against (a^2 + 2a)/16 sum y^2 along n_grid, m = round(a n)."""
    y = tuple(float(v) for v in y)
    if any(abs(v) > 2 for v in y):
        raise ValueError("y must lie in [-2, 2]^k")
    n_grid = list(n_grid)
    if n_grid != sorted(set(n_grid)):
        raise ValueError("n_grid must be strictly increasing")
    rep = SuiteReport("mgf_convergence")
    target = (a * a + 2 * a) / 16 * sum(v * v for v in y)
    gaps, values = [], []
    with mp.workprec(bits):
        for n in n_grid:
            m = int(round(a * n))
            v = float(mgf_exponent(m, n, y))
            values.append(v)
            gaps.append(abs(v - target))
        inputs = {"a": a, "n_grid": n_grid, "y": list(y)}
        mono = all(g2 <= g1 for g1, g2 in zip(gaps[1:], gaps[2:]))
        rep.add("gaps_shrink_after_first", inputs, "non-increasing", gaps, None, mono)
        if n_grid[-1] >= 64:
            rep.add("final_gap", inputs, target, values[-1], tol, gaps[-1] <= tol)
        n, m = n_grid[-1], int(round(a * n_grid[-1]))
        h = y[0]
        x = mp.exp(h / mp.sqrt(n))
        tm = float(mp.log(ch.normalized_symplectic(Signature.tau(m, n), x, n)))
        t0 = float(mp.log(ch.normalized_symplectic(Signature.tau(0, n), x, n)))
        tt = (a * a + 2 * a) / 16 * h * h
        rep.add("univariate_tau_m", {"n": n, "m": m, "h": h}, tt, tm, tol, abs(tm - tt) <= tol)
        rep.add("univariate_tau_0", {"n": n, "m": m, "h": h}, 0.0, t0, tol, abs(t0) <= tol)
        if len(y) >= 2:
            parts = sum(float(mgf_exponent(m, n, (v,))) for v in y)
            rep.add("multiplicativity", {"n": n, "m": m, "y": list(y)}, parts, values[-1], tol,
                    abs(values[-1] - parts) <= tol)
    rep.diagnostics = {"values": values, "gaps": gaps, "target": target}
    return rep.finish()


# --------------------------------------------------------------------------
# exact identities


def _rand_q(rng: random.Random, lo=-5, hi=5, den=4, avoid=()):
    while True:
        q = Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))
        if q not in avoid:
            return q


def _partitions(max_part, length):
    return list(ch.box_partitions(max_part, length))


def verify_exact_suite(seed: int = 0, macdonald_points: int = 20, prop319_cases: int = 50,
                       sections=None) -> SuiteReport:
    """Every exact character and tiling identity; rationals must match exactly."""
    rng = random.Random(seed)
    rep = SuiteReport("exact", seed=seed)
    want = set(sections) if sections else None

    def on(name):
        return want is None or name in want

    if on("macdonald"):
        ok, bad = 0, []
        for n in range(1, 5):
            for m in range(0, 5):
                for _ in range(macdonald_points):
                    pts = []
                    while len(pts) < n:
                        q = _rand_q(rng, avoid=set(pts) | {0, 1, -1})
                        pts.append(q)
                    lhs = ch.phi_m_eval(m, pts)
                    rhs = ch.phi_m_eval(m, pts, method="brute")
                    if lhs == rhs:
                        ok += 1
                    else:
                        bad.append((n, m, [str(p) for p in pts]))
        rep.add("macdonald_identity", {"n<=": 4, "m<=": 4, "points": macdonald_points}, 0, len(bad), 0, not bad)

    if on("branching"):
        bad = 0
        for n in range(2, 6):
            for lam in _partitions(4, n):
                s = sum(ch.schur_dim(mu, n - 1) for mu in product(*[range(lam[i + 1], lam[i] + 1) for i in range(n - 1)]))
                bad += s != ch.schur_dim(lam, n)
        rep.add("branching_rule", {"n<=": 5, "parts<=": 4}, 0, bad, 0, bad == 0)

    if on("prop319"):
        bad = 0
        for _ in range(prop319_cases):
            N = rng.randint(1, 6)
            lam = sorted((rng.randint(0, 4) for _ in range(N)), reverse=True)
            x = _rand_q(rng, avoid={0, 1, -1})
            sig = Signature.of(lam)
            direct = ch.normalized_symplectic(sig, x, N, method="confluent")
            via = Fraction(2) / (x + 1) * ch.normalized_schur(ch.schur_relation_signature(sig), x, 2 * N)
            bad += direct != via
        rep.add("symplectic_schur_relation", {"cases": prop319_cases, "N<=": 6}, 0, bad, 0, bad == 0)
        tau0 = ch.normalized_symplectic(Signature.tau(0, 3), 1, 3)
        rep.add("tau0_at_one", {"n": 3}, 1, tau0, 0, tau0 == 1)

    if on("denominator"):
        bad = 0
        for N in range(1, 7):
            for _ in range(5):
                pts = []
                while len(pts) < N:
                    pts.append(_rand_q(rng, avoid=set(pts) | {0}))
                d = ch.symplectic_denominator(pts, "determinant")
                bad += d != ch.symplectic_denominator(pts, "product")
        rep.add("denominator_identity", {"N<=": 6}, 0, bad, 0, bad == 0)

    if on("orthogonal"):
        bad = 0
        for _ in range(10):
            n = rng.randint(1, 3)
            lam = sorted((rng.randint(0, 3) for _ in range(n)), reverse=True)
            pts = []
            while len(pts) < n:
                # squares keep the half-integer powers of the determinant path rational
                q = Fraction(rng.randint(1, 6), rng.randint(1, 4)) ** 2
                if q not in pts and q != 1:
                    pts.append(q)
            bad += ch.orthogonal_eval(lam, pts) != ch.orthogonal_eval(lam, pts, method="determinant")
        for _ in range(10):
            pts = [Fraction(rng.randint(2, 7), rng.randint(1, 3)) ** 2 for _ in range(2)]
            if pts[0] == pts[1]:
                continue
            lhs = ch.phi_m_eval(2, pts)
            rhs = pts[0] * pts[1] * ch.orthogonal_eval((1, 1), pts)
            bad += lhs != rhs
        rep.add("orthogonal_paths", {"cases": 20}, 0, bad, 0, bad == 0)

    if on("beta"):
        bad = 0
        for lam, N, x in [((0, 0, 0, 0), 4, 4), ((2, 1, 0), 3, 9), (Signature.nu(0, 2), 4, 4),
                          ((3, 1, 1, 0), 4, Fraction(9, 4))]:
            r = ch.beta_shift_check(lam, N, 2, x)
            bad += r["lhs"] != r["rhs"]
        rep.add("beta_shift", {"beta": 2}, 0, bad, 0, bad == 0)

    if on("residue"):
        bad = 0
        for N in range(1, 7):
            for lam in _partitions(3, N):
                dim = ch.schur_dim(lam, N)
                for x in (2, 3, Fraction(1, 2)):
                    bad += ch.normalized_schur(lam, x, N) != Fraction(ch.schur_eval(lam, [x], N)) / dim
        rep.add("residue_vs_determinant", {"N<=": 6, "parts<=": 3}, 0, bad, 0, bad == 0)

    if on("skew"):
        cases = [(((2, 1), (1,), 2), 4), (((2, 2), (), 2), 1), (((3, 1), (3, 1), 5), 1),
                 (((3, 2, 1), (1, 1), 3), None)]
        bad = 0
        for (lam, mu, M), expect in cases:
            got = ch.skew_schur_dim(lam, mu, M)
            if expect is None:
                expect = _skew_brute(lam, mu, M)
            bad += got != expect
        rep.add("skew_dimensions", {"cases": len(cases)}, 0, bad, 0, bad == 0)

    if on("tiling"):
        bad = 0
        for n in range(1, 5):
            for m in range(0, 5):
                bad += sum(1 for _ in tiling.enumerate_free(n, m)) != tiling.count_free(n, m)
        rep.add("count_consistency", {"n<=": 4, "m<=": 4}, 0, bad, 0, bad == 0)
        bad = 0
        for n in range(1, 4):
            for m in range(0, 3):
                pats = list(tiling.enumerate_free(n, m))
                for p in pats:
                    bad += tiling.from_ssyt(tiling.to_ssyt(p), n, m) != p
                shapes = Counter(tuple(len(r) for r in tiling.to_ssyt(p)) for p in pats)
                tops = Counter(tuple(v for v in p.top if v) for p in pats)
                bad += shapes != tops
        rep.add("ssyt_bijection", {"n<=": 3, "m<=": 2}, 0, bad, 0, bad == 0)
        bad = 0
        for n in range(1, 4):
            for m in range(0, 4):
                pats = list(tiling.enumerate_free(n, m))
                for k in range(1, n + 1):
                    c = Counter(p.rows[k - 1] for p in pats)
                    bad += sum(c[y] != tiling.row_count(n, m, y) for y in c)
                for p in pats:
                    for k in range(1, n):
                        a, b = tiling.positions(p, k), tiling.positions(p, k + 1)
                        bad += not all(b[i] > a[i] >= b[i + 1] for i in range(k))
        rep.add("position_marginals_and_interlacing", {"n<=": 3, "m<=": 3}, 0, bad, 0, bad == 0)
        bad = 0
        for n in range(1, 4):
            for m in range(0, 4):
                for p in tiling.enumerate_free(n, m):
                    for k in range(1, n + 1):
                        w = downward_weights(p.rows[k - 1])
                        bad += sum(w.values()) != 1
        rep.add("downward_weights_sum_to_one", {"n<=": 3, "m<=": 3}, 0, bad, 0, bad == 0)

    return rep.finish()


def _skew_brute(lam, mu, M):
    """Count fillings of lam/mu with 1..M by direct search (independent oracle)."""
    lam = list(lam)
    mu = list(mu) + [0] * (len(lam) - len(mu))
    cells = [(i, j) for i in range(len(lam)) for j in range(mu[i], lam[i])]
    count = 0
    for vals in product(range(1, M + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        ok = all((i, j - 1) not in t or t[(i, j - 1)] <= v for (i, j), v in t.items()) and \
            all((i - 1, j) not in t or t[(i - 1, j)] < v for (i, j), v in t.items())
        count += ok
    return count


# --------------------------------------------------------------------------
# limit shape


def verify_limit_shape(a, x, n: int, samples: int, r_max: int, rng: RngStream,
                       method: str = "mcmc", burn_in: int | None = None,
                       thin: int | None = None, rel_tol: float = 0.05) -> SuiteReport:
    """Empirical counting-measure moments (free and hexagon) against the limit formula."""
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    if r_max > 6 or r_max < 1:
        raise ValueError("r_max must lie in 1..6")
    m = int(round(a * n))
    k = line_index(x, n)
    rep = SuiteReport("limit_shape", seed=rng.seed)
    if method == "mcmc":
        free_rows, free_rep = mcmc_sample_free(n, m, rng.child(0), samples, burn_in, thin, keep_rows=[k])
        hex_rows, hex_rep = mcmc_sample_hex(n, m, rng.child(1), samples, burn_in, thin, keep_rows=[k])
        free = empirical_moments(free_rows, x, r_max)
        hexa = hexagon_moments(hex_rows, x, r_max)
        info = {"free": free_rep.as_dict(), "hexagon": hex_rep.as_dict()}
    elif method == "exact":
        free = empirical_moments((exact_sample_free(n, m, rng.child(0)) for _ in range(samples)), x, r_max)
        hexa = hexagon_moments((exact_sample_hex(n, m, rng.child(1)) for _ in range(samples)), x, r_max)
        info = {"method": "exact"}
    else:
        raise ValueError(f"unknown method {method!r}")
    analytic = [float(limit_moment(r, x, a)) for r in range(r_max + 1)]
    inputs = {"a": a, "x": x, "n": n, "m": m, "k": k, "samples": samples, "method": method}
    rep.add("r0_free", inputs, 1.0, free[0], 0, free[0] == 1.0)
    rep.add("r0_hexagon", inputs, 1.0, hexa[0], 0, hexa[0] == 1.0)
    rows = []
    for r in range(1, r_max + 1):
        an = analytic[r]
        tol_f = max(rel_tol * abs(an), 3 * free.stderr[r])
        tol_h = max(rel_tol * abs(an), 3 * hexa.stderr[r])
        tol_c = max(rel_tol * abs(an), 3 * float(np.hypot(free.stderr[r], hexa.stderr[r])))
        rep.add(f"free_r{r}", {**inputs, "r": r}, an, free[r], tol_f, abs(free[r] - an) <= tol_f)
        rep.add(f"hexagon_r{r}", {**inputs, "r": r}, an, hexa[r], tol_h, abs(hexa[r] - an) <= tol_h)
        rep.add(f"free_vs_hexagon_r{r}", {**inputs, "r": r}, free[r], hexa[r], tol_c,
                abs(free[r] - hexa[r]) <= tol_c)
        rows.append({"r": r, "analytic": an, "free": free[r], "free_se": free.stderr[r],
                     "hexagon": hexa[r], "hexagon_se": hexa.stderr[r]})
    rep.diagnostics = {"moments": rows, "samplers": info}
    return rep.finish()
