"""Truncated Taylor series (jets) with mpmath coefficients."""

from __future__ import annotations

from math import factorial

import mpmath as mp

JET_BITS = 256
MAX_ORDER = 16


class Jet:
    """f(u) = sum_k c_k (u - base)^k truncated at order R.

    All arithmetic runs at ``JET_BITS`` and is exact truncation to order R.
    """

    __slots__ = ("coeffs", "base")

    def __init__(self, coeffs, base=1):
        if len(coeffs) - 1 > MAX_ORDER:
            raise ValueError(f"jet order {len(coeffs) - 1} exceeds {MAX_ORDER}")
        if len(coeffs) == 0:
            raise ValueError("a jet needs at least one coefficient")
        with mp.workprec(JET_BITS):
            self.coeffs = tuple(mp.mpf(c) if not isinstance(c, mp.mpc) else c for c in coeffs)
        self.base = base

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def variable(cls, order: int, base=1) -> "Jet":
        """The identity function u at the base point."""
        return cls([base, 1] + [0] * (order - 1), base)

    @classmethod
    def constant(cls, c, order: int, base=1) -> "Jet":
        return cls([c] + [0] * order, base)

    def derivative_value(self, ell: int):
        """d^ell f / du^ell at the base point."""
        return self.coeffs[ell] * factorial(ell)

    def _lift(self, other) -> "Jet":
        if isinstance(other, Jet):
            if other.order != self.order or other.base != self.base:
                raise ValueError("jets of different order or base")
            return other
        return Jet.constant(other, self.order, self.base)

    def _new(self, coeffs) -> "Jet":
        return Jet(coeffs, self.base)

    def __add__(self, other):
        o = self._lift(other)
        with mp.workprec(JET_BITS):
            return self._new([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        R = self.order
        a, b = self.coeffs, o.coeffs
        with mp.workprec(JET_BITS):
            return self._new([mp.fsum(a[j] * b[k - j] for j in range(k + 1)) for k in range(R + 1)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("jet division by a series vanishing at the base point")
        q = []
        with mp.workprec(JET_BITS):
            for k in range(self.order + 1):
                s = a[k] - mp.fsum(b[j] * q[k - j] for j in range(1, k + 1))
                q.append(s / b[0])
        return self._new(q)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("only integer jet powers are supported")
        if e < 0:
            return 1 / (self ** (-e))
        out = Jet.constant(1, self.order, self.base)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def ln(self) -> "Jet":
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("log of a jet vanishing at the base point")
        b = []
        with mp.workprec(JET_BITS):
            b.append(mp.log(a[0]))
            for k in range(1, self.order + 1):
                s = a[k] - mp.fsum(j * b[j] * a[k - j] for j in range(1, k)) / k
                b.append(s / a[0])
        return self._new(b)

    def exp(self) -> "Jet":
        a = self.coeffs
        e = []
        with mp.workprec(JET_BITS):
            e.append(mp.exp(a[0]))
            for k in range(1, self.order + 1):
                e.append(mp.fsum(j * a[j] * e[k - j] for j in range(1, k + 1)) / k)
        return self._new(e)

    def sqrt(self) -> "Jet":
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("sqrt of a jet vanishing at the base point")
        s = []
        with mp.workprec(JET_BITS):
            s.append(mp.sqrt(a[0]))
            for k in range(1, self.order + 1):
                t = a[k] - mp.fsum(s[j] * s[k - j] for j in range(1, k))
                s.append(t / (2 * s[0]))
        return self._new(s)

    def derivative(self) -> "Jet":
        """f' as a jet of order R - 1."""
        with mp.workprec(JET_BITS):
            return self._new([k * self.coeffs[k] for k in range(1, self.order + 1)] or [0])

    def compose(self, inner: "Jet") -> "Jet":
        """self(inner(u)), where self is expanded at inner's value at the base point."""
        if inner.coeffs[0] != self.base:
            raise ValueError("inner jet must take the value of the outer base point")
        R = min(self.order, inner.order)
        shift = Jet([0] + list(inner.coeffs[1:R + 1]), inner.base)
        out = Jet.constant(self.coeffs[R], R, inner.base)
        for c in reversed(self.coeffs[:R]):
            out = out * shift + c
        return out

    def truncate(self, order: int) -> "Jet":
        return self._new(self.coeffs[:order + 1])

    def __call__(self, u):
        """Evaluate the truncated polynomial at u."""
        with mp.workprec(JET_BITS):
            t = mp.mpf(u) - self.base
            return mp.fsum(c * t ** k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Jet(order={self.order}, base={self.base}, coeffs=[" + \
            ", ".join(mp.nstr(c, 12) for c in self.coeffs) + "])"
