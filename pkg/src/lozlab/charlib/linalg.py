"""Determinants over Q (fraction-free) or mpmath, and confluent row builders."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .precision import is_exact


def det_int(rows):
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_exact(rows):
    """Exact determinant of a matrix of ints/Fractions."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        return 1
    # clear denominators row by row, then go fraction-free
    scale = Fraction(1)
    int_rows = []
    for r in rows:
        den = 1
        for v in r:
            if isinstance(v, Fraction):
                den = den * v.denominator // _gcd(den, v.denominator)
        int_rows.append([int(v * den) for v in r])
        scale /= den
    return scale * det_int(int_rows)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def det(rows):
    """Exact when every entry is exact, otherwise mpmath LU at current precision."""
    rows = [list(r) for r in rows]
    if not rows:
        return 1
    if all(is_exact(v) for r in rows for v in r):
        return det_exact(rows)
    return det_float([[_mp(v) for v in r] for r in rows])


def det_float(rows):
    """LU with partial pivoting at the current mpmath precision.

    Unlike mpmath's det there is no singularity tolerance: badly scaled but
    nonsingular confluent matrices keep their determinant, and the caller's
    precision doubling decides whether the digits are trustworthy.
    """
    a = [list(r) for r in rows]
    n = len(a)
    out = mp.mpf(1)
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[piv][k] == 0:
            return mp.mpf(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            out = -out
        akk = a[k][k]
        out *= akk
        for i in range(k + 1, n):
            f = a[i][k] / akk
            if f == 0:
                continue
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] -= f * rk[j]
    return out


def _mp(v):
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    return v


def confluent_orders(points):
    """Derivative order for each point: 0 for the first occurrence, 1 for the next..."""
    seen = {}
    orders = []
    for p in points:
        key = _key(p)
        c = seen.get(key, 0)
        orders.append(c)
        seen[key] = c + 1
    return orders


def _key(p):
    if isinstance(p, (int, Fraction)):
        return ("q", Fraction(p))
    return ("f", p)


def has_repeats(points) -> bool:
    return any(o > 0 for o in confluent_orders(points))


@lru_cache(maxsize=None)
def gen_binom(e, p: int):
    """Generalized binomial C(e, p) for integer (possibly negative) e."""
    num = 1
    for i in range(p):
        num *= e - i
    den = 1
    for i in range(2, p + 1):
        den *= i
    return Fraction(num, den) if num % den else num // den


def power_taylor(x, e: int, p: int):
    """p-th Taylor coefficient of t -> t**e at t = x."""
    c = gen_binom(e, p)
    if c == 0:
        return 0
    if is_exact(x):
        return c * Fraction(x) ** (e - p)
    return c * mp.power(x, e - p)


def poly_taylor(coeffs, z, p: int):
    """p-th Taylor coefficient at z of the polynomial sum coeffs[k] t**k."""
    if is_exact(z):
        return _poly_taylor_exact(tuple(coeffs), Fraction(z), p)
    total = 0
    zp = mp.mpf(1) if not isinstance(z, mp.mpc) else mp.mpc(1)
    for k in range(p, len(coeffs)):
        c = coeffs[k]
        if c:
            total += c * gen_binom(k, p) * zp
        zp *= z
    return total


@lru_cache(maxsize=200_000)
def _poly_taylor_exact(coeffs, z, p):
    total = 0
    zp = Fraction(1)
    for k in range(p, len(coeffs)):
        c = coeffs[k]
        if c:
            total += c * gen_binom(k, p) * zp
        zp *= z
    return total
