"""Schur, symplectic and odd-orthogonal characters, exactly where possible.

Evaluation points are sequences ``(x_1, ..., x_k)``; an optional ``N`` pads
them with ones to ``(x_1, ..., x_k, 1^{N-k})``. Repeated arguments (including
collisions with the padding ones) are handled by confluent determinants, in
which a repeated row is replaced by the next Taylor coefficient of the same
column functions. Symplectic-type determinants are evaluated in the variable
``z = x + 1/x`` after dividing every column function by ``x - 1/x``, so that
``x = 1`` and ``x <-> 1/x`` collisions are ordinary confluences.
"""

from __future__ import annotations

from contextvars import ContextVar
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

import mpmath as mp

from . import linalg
from .precision import (all_exact, as_scalar, half_power, is_exact, rel_diff,
                        stabilized, to_mp)
from .signature import Signature, as_signature

# precision (bits) at which the current evaluation's inputs were given; the
# coincidence tolerance of floating points follows it, not the working precision
_INPUT_BITS: ContextVar = ContextVar("input_bits", default=None)


def _coincidence_tol():
    bits = _INPUT_BITS.get() or mp.mp.prec
    return mp.mpf(2) ** (8 - bits)


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _point(values, N=None, allow_zero=False):
    xs = [as_scalar(v) for v in values]
    if N is not None:
        if len(xs) > N:
            raise ValueError(f"{len(xs)} values do not fit in N={N}")
        xs = xs + [1] * (N - len(xs))
    if not allow_zero and any(x == 0 for x in xs):
        raise ValueError("zero coordinate")
    return _snap(xs)


def _snap(xs):
    """Make floating coordinates that coincide (x_j = x_i or x_j = 1/x_i) to within
    the input precision exactly coincident, so they take the confluent route."""
    if all_exact(xs):
        return xs
    tol = _coincidence_tol()
    out = list(xs)
    for j in range(len(out)):
        xj = out[j]
        if is_exact(xj) or xj == 0:
            continue
        for i in range(j):
            xi = out[i]
            if xi == 0:
                continue
            if xi != xj and abs(xi - xj) <= tol * abs(xi):
                out[j] = xi
                break
            inv = 1 / xi
            if xj != inv and abs(xj - inv) <= tol * abs(inv):
                out[j] = inv
                break
    return out


def _evaluate(fn, xs):
    if all_exact(xs):
        return fn()
    outer = _INPUT_BITS.get()
    token = _INPUT_BITS.set(mp.mp.prec if outer is None else min(outer, mp.mp.prec))
    try:
        return stabilized(fn, start_bits=mp.mp.prec)
    finally:
        _INPUT_BITS.reset(token)


# --------------------------------------------------------------------------
# GL_N


def schur_dim(lam, N: int | None = None) -> int:
    """s_lambda(1^N) by the Weyl dimension formula."""
    sig = as_signature(lam)
    N = sig.length if N is None else N
    if not sig.is_integral:
        raise ValueError("schur_dim needs integer parts")
    parts = list(sig.int_parts()) + [0] * (N - sig.length)
    if len(parts) > N:
        raise ValueError(f"signature longer than N={N}")
    num = 1
    den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= parts[i] - parts[j] + j - i
            den *= j - i
    return num // den


def _h_ones(r: int, M: int) -> int:
    if r < 0:
        return 0
    if M == 0:
        return 1 if r == 0 else 0
    return binom(M + r - 1, r)


def skew_schur_dim(lam, mu, M: int) -> int:
    """s_{lambda/mu}(1^M) via the Jacobi-Trudi determinant."""
    if M < 0:
        raise ValueError("M must be non-negative")
    lam = tuple(as_signature(lam).int_parts())
    mu = tuple(as_signature(mu).int_parts()) if len(mu) else ()
    ell = max(len(lam), len(mu))
    lam = lam + (0,) * (ell - len(lam))
    mu = mu + (0,) * (ell - len(mu))
    if any(m > l for l, m in zip(lam, mu)):
        return 0
    rows = [[_h_ones(lam[i] - mu[j] - i + j, M) for j in range(ell)]
            for i in range(ell)]
    return linalg.det_int(rows)


def _power_ratio(num_exps, den_exps, xs):
    orders = linalg.confluent_orders(xs)
    num = [[linalg.power_taylor(x, e, p) for e in num_exps] for x, p in zip(xs, orders)]
    den = [[linalg.power_taylor(x, e, p) for e in den_exps] for x, p in zip(xs, orders)]
    return linalg.det(num) / linalg.det(den)


def _prod(values):
    out = 1
    for v in values:
        out = out * v
    return out


def schur_eval(lam, values, N: int | None = None):
    """s_lambda(x_1, ..., x_k, 1^{N-k}) by the (confluent) bialternant.

    Zero coordinates are allowed when lambda is a partition (a polynomial).
    """
    sig = as_signature(lam)
    xs = _point(values, N, allow_zero=sig.is_integral and all(p >= 0 for p in sig.parts))
    n = len(xs)
    if sig.length < n and sig.parity == 0:
        sig = sig.padded(n)
    if sig.length != n:
        raise ValueError(f"signature length {sig.length} != number of variables {n}")
    # all doubled shifted positions share a parity; pull out x^{1/2} if odd
    parity = sig.parity
    exps = [(d - parity) // 2 + n - 1 - i for i, d in enumerate(sig.doubled_parts)]
    den = [n - 1 - i for i in range(n)]

    def run():
        val = _power_ratio(exps, den, xs)
        if parity:
            val = val * half_power(_prod(xs), 1)
        return val

    return _evaluate(run, xs)


def _residue_sum(doubled_ls, x):
    """Sum_i x^{l_i} / prod_{j != i}(l_i - l_j) for distinct l_i of common parity."""
    parity = doubled_ls[0] % 2
    n = len(doubled_ls)
    total = 0
    exact = is_exact(x)
    xq = Fraction(x) if exact else x
    for i, li in enumerate(doubled_ls):
        den = 1
        for j, lj in enumerate(doubled_ls):
            if j != i:
                den *= li - lj
        e = (li - parity) // 2
        term = xq ** e if exact else mp.power(xq, e)
        # den carries a factor 2^(n-1) from the doubling
        total += term * Fraction(2 ** (n - 1), den) if exact else term * mp.mpf(2 ** (n - 1)) / den
    return total, parity


def normalized_schur(lam, x, N: int | None = None):
    """S_lambda(x; N) = s_lambda(x, 1^{N-1}) / s_lambda(1^N) via the residue sum."""
    x = as_scalar(x)
    if x == 1:
        raise ValueError("x = 1: the normalized character equals 1 there by definition")
    if x == 0:
        raise ValueError("zero coordinate")
    sig = as_signature(lam)
    N = sig.length if N is None else N
    if sig.length < N:
        sig = sig.padded(N)
    ls = sig.doubled_shifted_positions(N)

    def run():
        s, parity = _residue_sum(ls, x)
        pref = Fraction(factorial(N - 1)) / (Fraction(x) - 1) ** (N - 1) if is_exact(x) \
            else factorial(N - 1) / (x - 1) ** (N - 1)
        val = pref * s
        if parity:
            val = val * half_power(x, 1)
        return val

    return _evaluate(run, [x])


# --------------------------------------------------------------------------
# symplectic-type determinants in z = x + 1/x


@lru_cache(maxsize=None)
def _sym_poly(dl: int) -> tuple:
    """Coefficients in z of (x^l - x^-l)/(x - 1/x) (integer l = dl/2), or of the
    same quantity times x^{1/2} + x^{-1/2} (half-integer l)."""
    if dl < 0:
        return tuple(-c for c in _sym_poly(-dl))
    if dl % 2 == 0:
        if dl == 0:
            return (0,)
        if dl == 2:
            return (1,)
        a, b = _sym_poly(dl - 2), _sym_poly(dl - 4)
    else:
        if dl == 1:
            return (1,)
        a, b = _sym_poly(dl - 2), _sym_poly(dl - 4) if dl >= 3 else None
        if dl == 3:
            b = (-1,)
    out = [0] * (len(a) + 1)
    for k, c in enumerate(a):
        out[k + 1] += c
    for k, c in enumerate(b):
        out[k] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _z(x):
    return Fraction(x) + 1 / Fraction(x) if is_exact(x) else x + 1 / x


def _zs(xs):
    """z = x + 1/x for every coordinate; floating values equal to within the
    working precision are made identical so they share a confluent block."""
    zs = [_z(x) for x in xs]
    if all_exact(zs):
        return zs
    tol = _coincidence_tol()
    for j in range(len(zs)):
        for i in range(j):
            if not is_exact(zs[j]) and zs[i] != zs[j] and abs(zs[i] - zs[j]) <= tol * abs(zs[i]):
                zs[j] = zs[i]
                break
    return zs


def _sym_ratio(num_dls, den_dls, xs):
    """det[f_{l_j}(x_i)] / det[f_{l'_j}(x_i)] with f_l = x^l - x^-l, confluent in z.

    Returns (ratio, w_exp): the true ratio is ratio * prod_i w_i^w_exp with
    w_i = x_i^{1/2} + x_i^{-1/2}.
    """
    zs = _zs(xs)
    orders = linalg.confluent_orders(zs)
    num = [[linalg.poly_taylor(_sym_poly(d), z, p) for d in num_dls] for z, p in zip(zs, orders)]
    den = [[linalg.poly_taylor(_sym_poly(d), z, p) for d in den_dls] for z, p in zip(zs, orders)]
    w_exp = (den_dls[0] % 2) - (num_dls[0] % 2)
    return linalg.det(num) / linalg.det(den), w_exp


def _w_power(xs, e: int):
    """prod_i (x_i^{1/2} + x_i^{-1/2})^e = prod (x_i+1)^e * (prod x_i)^{-e/2}."""
    if e == 0:
        return 1
    base = _prod((Fraction(x) + 1 if is_exact(x) else x + 1) for x in xs)
    return (base ** e if is_exact(base) else mp.power(base, e)) * half_power(_prod(xs), -e)


def _symplectic_parts(sig: Signature, xs):
    N = len(xs)
    num = [d + 2 * (N - i) for i, d in enumerate(sig.doubled_parts)]
    den = [2 * (N - i) for i in range(N)]
    return _sym_ratio(num, den, xs)


def symplectic_eval(lam, values, N: int | None = None):
    """chi_lambda(x_1, ..., x_k, 1^{N-k}) for Sp(2N)."""
    xs = _point(values, N)
    sig = as_signature(lam)
    if sig.length < len(xs):
        sig = sig.padded(len(xs))
    if sig.length != len(xs):
        raise ValueError("signature length must equal the number of variables")

    def run():
        r, e = _symplectic_parts(sig, xs)
        return r * _w_power(xs, e)

    return _evaluate(run, xs)


def symplectic_denominator(values, form: str = "determinant"):
    """The Weyl denominator det[x_i^{N-j+1} - x_i^{-N+j-1}] in one of three forms."""
    xs = _point(values)
    N = len(xs)

    def run():
        if form == "determinant":
            rows = [[_ipow(x, N - j) - _ipow(x, -(N - j)) for j in range(N)] for x in xs]
            return linalg.det(rows)
        if form == "product":
            out = 1
            for x in xs:
                out *= x - _inv(x)
            for i, j in combinations(range(N), 2):
                out *= xs[i] + _inv(xs[i]) - xs[j] - _inv(xs[j])
            return out
        if form == "vandermonde":
            out = 1
            for i, j in combinations(range(N), 2):
                out *= (xs[i] - xs[j]) * (xs[i] * xs[j] - 1)
            for x in xs:
                out *= x * x - 1
            return out / _ipow(_prod(xs), N)
        raise ValueError(f"unknown form {form!r}")

    return _evaluate(run, xs)


def _ipow(x, e):
    return Fraction(x) ** e if is_exact(x) else mp.power(x, e)


def _inv(x):
    return 1 / Fraction(x) if is_exact(x) else 1 / x


def normalized_symplectic(lam, x, N: int | None = None, method: str = "residue"):
    """X_lambda(x; N) = chi_lambda(x, 1^{N-1}) / chi_lambda(1^N).

    ``method="residue"`` uses the Schur relation with nu of length 2N;
    ``method="confluent"`` divides two confluent determinant evaluations.
    """
    x = as_scalar(x)
    if x == 1:
        return 1
    if x == 0 or x == -1:
        raise ValueError("x must avoid 0 and -1")
    sig = as_signature(lam)
    N = sig.length if N is None else N
    if sig.length < N:
        sig = sig.padded(N)
    if method == "confluent":
        xs = [x] + [1] * (N - 1)

        def run():
            r1, e = _symplectic_parts(sig, xs)
            r0, _ = _symplectic_parts(sig, [1] * N)
            # w(1) = 2 for the padding coordinates; only x's factor survives
            wx = _w_power([x], e) * Fraction(2) ** (-e) if is_exact(x) else _w_power([x], e) / mp.mpf(2) ** e
            return r1 / r0 * wx

        return _evaluate(run, [x])
    if method != "residue":
        raise ValueError(f"unknown method {method!r}")
    nu = schur_relation_signature(sig)

    def run():
        s = normalized_schur(nu, x, 2 * N)
        return (Fraction(2) / (Fraction(x) + 1) if is_exact(x) else 2 / (x + 1)) * s

    return _evaluate(run, [x])


def schur_relation_signature(sig: Signature) -> Signature:
    """nu with nu_i = lambda_i + 1 (i <= N), nu_i = -lambda_{2N-i+1} (i > N)."""
    d = sig.doubled_parts
    return Signature(tuple(p + 2 for p in d) + tuple(-p for p in reversed(d)))


# --------------------------------------------------------------------------
# odd orthogonal and the boxed Schur sums


def orthogonal_eval(lam, values, N: int | None = None, method: str = "relation"):
    """gamma_lambda for O(2n+1).

    ``relation``: chi_{lambda - 1/2} / chi_{(-1/2)^n}; ``determinant``: the
    half-integer power determinant ratio (confluent in z on collisions).
    """
    xs = _point(values, N)
    n = len(xs)
    sig = as_signature(lam)
    if sig.length < n:
        sig = sig.padded(n)
    if method == "relation":
        shifted = sig.shifted(-1)
        base = Signature((-1,) * n)

        def run():
            r1, e1 = _symplectic_parts(shifted, xs)
            r0, e0 = _symplectic_parts(base, xs)
            return r1 / r0 * _w_power(xs, e1 - e0)

        return _evaluate(run, xs)
    if method != "determinant":
        raise ValueError(f"unknown method {method!r}")
    num = [d + 2 * (n - 1 - i) + 1 for i, d in enumerate(sig.doubled_parts)]
    den = [2 * (n - 1 - i) + 1 for i in range(n)]
    zs = _zs(xs)
    if linalg.has_repeats(zs) or any(x == 1 or x == -1 for x in xs):
        def run():
            r, e = _sym_ratio(num, den, xs)
            return r * _w_power(xs, e)
    else:
        def run():
            top = [[half_power(x, d) - half_power(x, -d) for d in num] for x in xs]
            bot = [[half_power(x, d) - half_power(x, -d) for d in den] for x in xs]
            return linalg.det(top) / linalg.det(bot)
    return _evaluate(run, xs)


def box_partitions(m: int, n: int):
    """All partitions with at most n parts, each <= m, as length-n tuples (colex-free order)."""
    def rec(prefix, cap, left):
        if left == 0:
            yield tuple(prefix)
            return
        for v in range(cap, -1, -1):
            prefix.append(v)
            yield from rec(prefix, v, left - 1)
            prefix.pop()
    yield from rec([], m, n)


def phi_m_eval(m: int, values, n: int | None = None, method: str = "determinant"):
    """phi_m = sum over lambda in the m^n box of s_lambda, by Macdonald's identity.

    ``method="brute"`` sums schur_eval over the box instead.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    xs = _point(values, n)
    n = len(xs)
    if method == "brute":
        return _evaluate(lambda: sum(schur_eval(lam, xs) for lam in box_partitions(m, n)), xs)
    if method != "determinant":
        raise ValueError(f"unknown method {method!r}")
    if m == 0:
        return 1
    zs = _zs(xs)
    if not linalg.has_repeats(zs) and all(x != 1 and x != -1 for x in xs):
        def run():
            top = [[_ipow(x, m + 2 * n - i) - _ipow(x, i - 1) for x in xs] for i in range(1, n + 1)]
            bot = [[_ipow(x, 2 * n - i) - _ipow(x, i - 1) for x in xs] for i in range(1, n + 1)]
            return linalg.det(top) / linalg.det(bot)
        return _evaluate(run, xs)

    num = [m + 2 * n + 1 - 2 * i for i in range(1, n + 1)]
    den = [2 * n + 1 - 2 * i for i in range(1, n + 1)]

    def run():
        r, e = _sym_ratio(num, den, xs)
        # prod x^{m/2} w^e = prod x^{(m-e)/2} (x+1)^e, with m - e even
        fac = 1
        for x in xs:
            fac = fac * _ipow(x, (m - e) // 2) * _ipow(x + 1, e)
        return r * fac

    return _evaluate(run, xs)


def Phi_m_eval(m: int, values, n: int, method: str = "phi"):
    """Phi_m(x_1..x_k; n) = phi_m(x, 1^{n-k}) / phi_m(1^n).

    ``phi``: Macdonald ratio; ``symplectic``: prod x^{m/2} X_{tau^m}/X_{tau^0}
    via confluent symplectic determinants; ``residue``: k = 1 only, through
    the Schur relation and the residue sum (cheap for large n).
    """
    vals = [as_scalar(v) for v in values]
    k = len(vals)
    if k > n:
        raise ValueError("more values than n")
    if all(v == 1 for v in vals):
        return 1
    if method == "phi":
        xs = _point(vals, n)
        return _evaluate(lambda: phi_m_eval(m, xs) / phi_m_count(m, n), xs)
    if method == "symplectic":
        xs = _point(vals, n)
        tm, t0 = Signature.tau(m, n), Signature.tau(0, n)

        def run():
            rm, _ = _symplectic_parts(tm, xs)
            r0, _ = _symplectic_parts(t0, xs)
            rm1, _ = _symplectic_parts(tm, [1] * n)
            r01, _ = _symplectic_parts(t0, [1] * n)
            fac = 1
            for x in vals:
                if m % 2:
                    fac = fac * _ipow(x, (m - 1) // 2) * (x + 1) / 2
                else:
                    fac = fac * _ipow(x, m // 2)
            return rm / rm1 * r01 / r0 * fac

        return _evaluate(run, xs)
    if method == "residue":
        if k != 1:
            raise ValueError("the residue path is univariate")
        return Phi_m_univariate(m, vals[0], n)
    raise ValueError(f"unknown method {method!r}")


def Phi_m_univariate(m: int, x, n: int):
    """Phi_m(x; n) = x^{m/2} S_{nu^m}(x; 2n) / S_{nu^0}(x; 2n) by residue sums."""
    x = as_scalar(x)
    if x == 1:
        return 1
    if x == 0:
        raise ValueError("zero coordinate")
    lm = Signature.nu(m, n).doubled_shifted_positions()
    l0 = Signature.nu(0, n).doubled_shifted_positions()

    def run():
        sm, pm = _residue_sum(lm, x)
        s0, p0 = _residue_sum(l0, x)
        # x^{m/2} * x^{pm/2} / x^{p0/2}; m + pm - p0 is even
        return _ipow(x, (m + pm - p0) // 2) * sm / s0

    return _evaluate(run, [x])


@lru_cache(maxsize=None)
def phi_m_count(m: int, n: int) -> int:
    """phi_m(1^n): the number of free-boundary tilings."""
    num, den = 1, 1
    # prod_{1<=i<=j<=n} (m+i+j-1)/(i+j-1)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            num *= m + i + j - 1
            den *= i + j - 1
    return num // den


# --------------------------------------------------------------------------
# Bessel function and the beta-shift identity


def bessel_B(x, y):
    """B_k(x; y) = det[e^{x_i y_j}] prod_{i<j}(j-i) / (Delta(x) Delta(y)), confluent."""
    xs = [to_mp(as_scalar(v)) for v in x]
    ys = [to_mp(as_scalar(v)) for v in y]
    k = len(xs)
    if len(ys) != k:
        raise ValueError("x and y must have the same length")

    def run():
        xv = [mp.mpf(v) if not isinstance(v, mp.mpc) else v for v in xs]
        yv = [mp.mpf(v) if not isinstance(v, mp.mpc) else v for v in ys]
        po = linalg.confluent_orders(xv)
        qo = linalg.confluent_orders(yv)
        num = [[_exp_taylor(xi, yj, p, q) for yj, q in zip(yv, qo)] for xi, p in zip(xv, po)]
        dx = [[linalg.power_taylor(xi, k - 1 - j, p) for j in range(k)] for xi, p in zip(xv, po)]
        dy = [[linalg.power_taylor(yj, k - 1 - i, q) for yj, q in zip(yv, qo)] for i in range(k)]
        sf = 1
        for i, j in combinations(range(k), 2):
            sf *= j - i
        return linalg.det(num) * sf / (linalg.det(dx) * linalg.det(dy))

    return stabilized(run, start_bits=mp.mp.prec)


def _exp_taylor(x, y, p: int, q: int):
    """(1/(p! q!)) d^p/dx^p d^q/dy^q exp(x y)."""
    total = 0
    for r in range(min(p, q) + 1):
        total += comb(q, r) * (factorial(p) // factorial(p - r)) * mp.power(y, p - r) * mp.power(x, q - r)
    return total * mp.exp(x * y) / (factorial(p) * factorial(q))


def beta_shift_check(lam, N: int, beta, x) -> dict:
    """Compare S_lambda(x; N) with (beta (x^{1/beta} - 1)/(x - 1))^{N-1} S_hat(x^{1/beta}; N)."""
    sig = as_signature(lam, N)
    x = as_scalar(x)
    beta_q = as_scalar(beta)
    hat = []
    for i, p in enumerate(sig.parts):
        v = beta_q * p + (beta_q - 1) * (N - 1 - i)
        if is_exact(v):
            hat.append(Fraction(v))
        else:
            raise ValueError("beta * lambda must stay (half-)integral")
    hat_sig = Signature.of(hat)

    def root():
        if is_exact(beta_q) and Fraction(beta_q) == 2:
            return half_power(x, 1)
        return mp.power(to_mp(x), 1 / to_mp(beta_q))

    def run():
        lhs = normalized_schur(sig, x, N) if x != 1 else 1
        r = root()
        b, xx = (beta_q, x) if is_exact(r) else (to_mp(beta_q), to_mp(x))
        fac = b * (r - 1) / (xx - 1)
        rhs = fac ** (N - 1) * normalized_schur(hat_sig, r, N)
        return lhs, rhs

    with mp.workprec(max(mp.mp.prec, 128)):
        lhs, rhs = run()
        diff = 0 if lhs == rhs else rel_diff(lhs, rhs)
    return {
        "lambda": str(sig), "N": N, "beta": str(beta_q), "x": str(x),
        "lhs": lhs, "rhs": rhs, "rel_diff": diff,
        "lambda_hat": str(hat_sig),
    }


def _residue_laurent(doubled_ls):
    """The residue sum as a sparse Laurent polynomial {exponent: Fraction}."""
    parity = doubled_ls[0] % 2
    n = len(doubled_ls)
    out = {}
    for i, li in enumerate(doubled_ls):
        den = 1
        for j, lj in enumerate(doubled_ls):
            if j != i:
                den *= li - lj
        out[(li - parity) // 2] = Fraction(2 ** (n - 1), den)
    return out, parity


def line_one_law(m: int, n: int) -> list:
    """Exact law of the first-line particle: P(Y^1 = j) for j = 0..m.

    Phi_m(x; n) is the generating function E x^{Y^1}; it is recovered as the
    exact quotient of the two residue-sum Laurent polynomials.
    """
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    if m == 0:
        return [Fraction(1)]
    a, pa = _residue_laurent(Signature.nu(m, n).doubled_shifted_positions())
    b, pb = _residue_laurent(Signature.nu(0, n).doubled_shifted_positions())
    shift = (m + pa - pb) // 2
    a = {e + shift: c for e, c in a.items()}
    b_terms = sorted(b.items(), reverse=True)
    b_top_e, b_top = b_terms[0]
    q = {}
    while a:
        e = max(a)
        if e < b_top_e:
            break
        c = a.pop(e) / b_top
        if c == 0:
            continue
        d = e - b_top_e
        q[d] = c
        for eb, cb in b_terms[1:]:
            key = eb + d
            v = a.get(key, 0) - c * cb
            if v:
                a[key] = v
            else:
                a.pop(key, None)
    if a or (q and (min(q) < 0 or max(q) > m)):
        raise ArithmeticError("generating function division left a remainder")
    return [q.get(j, Fraction(0)) for j in range(m + 1)]
