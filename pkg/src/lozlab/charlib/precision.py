"""Scalar plumbing: exact rationals vs. mpmath precision floats."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

import mpmath as mp

MIN_BITS = 128
MAX_BITS = 2048
STABLE_RTOL = 1e-12


class PrecisionError(ArithmeticError):
    """An evaluation did not stabilize within the precision budget."""


def is_exact(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def as_scalar(v):
    """Normalize an input value.

    ints and Fractions stay exact, strings are parsed as exact decimals or
    fractions, everything else becomes an mpmath number.
    """
    if isinstance(v, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v
    if isinstance(v, Rational):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, (mp.mpf, mp.mpc)):
        return v
    if isinstance(v, complex):
        return mp.mpc(v)
    return mp.mpf(v)


def all_exact(values) -> bool:
    return all(is_exact(v) for v in values)


def sqrt_exact(q):
    """Exact square root of a non-negative rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def half_power(x, doubled_exp: int):
    """x ** (doubled_exp / 2), exact when possible."""
    if doubled_exp % 2 == 0:
        return _ipow(x, doubled_exp // 2)
    if is_exact(x):
        r = sqrt_exact(x)
        if r is not None:
            return _ipow(r, doubled_exp)
        x = mp.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mp.mpf(x)
    if isinstance(x, mp.mpf) and x < 0:
        raise ValueError("half-integer powers need a positive real base")
    return mp.power(x, mp.mpf(doubled_exp) / 2)


def _ipow(x, e: int):
    if is_exact(x):
        return Fraction(x) ** e
    return mp.power(x, e)


def to_mp(v):
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    if isinstance(v, int):
        return mp.mpf(v)
    return v


def rel_diff(a, b):
    a, b = to_mp(a), to_mp(b)
    scale = max(abs(a), abs(b))
    if scale == 0:
        return mp.mpf(0)
    return abs(a - b) / scale


def stabilized(fn, start_bits: int = MIN_BITS, max_bits: int = MAX_BITS,
               rtol: float = STABLE_RTOL):
    """Evaluate ``fn()`` at doubling precisions until two runs agree.

    Exact results short-circuit: if the first call returns an int or Fraction
    it is returned unchanged.
    """
    bits = max(start_bits, MIN_BITS)
    prev = None
    while bits <= max_bits:
        with mp.workprec(bits):
            val = fn()
            if is_exact(val):
                return val
            if prev is not None and rel_diff(val, prev) <= rtol:
                return +val
        prev = val
        bits *= 2
    raise PrecisionError(
        f"evaluation did not stabilize to {rtol:g} relative by {max_bits} bits")
