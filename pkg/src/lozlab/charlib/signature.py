"""Highest weights stored as doubled integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Signature:
    """Weakly decreasing tuple of integers or half-integers, largest part first.

    Parts are stored doubled (``2*lambda_i``) so half-integers stay exact.
    """

    doubled_parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.doubled_parts)
        object.__setattr__(self, "doubled_parts", parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"signature must be weakly decreasing: {self.parts}")
        if len({p % 2 for p in parts}) > 1:
            raise ValueError("mixed integer and half-integer parts")

    @classmethod
    def of(cls, parts) -> "Signature":
        doubled = []
        for p in parts:
            q = Fraction(p) if not isinstance(p, float) else Fraction(p).limit_denominator(2)
            if (2 * q).denominator != 1:
                raise ValueError(f"part {p} is not an integer or half-integer")
            doubled.append(int(2 * q))
        return cls(tuple(doubled))

    @classmethod
    def zero(cls, n: int) -> "Signature":
        return cls((0,) * n)

    @classmethod
    def rectangle(cls, m: int, n: int, pad: int = 0) -> "Signature":
        """(m^n, 0^pad); with pad = n this is the hexagon top row."""
        return cls((2 * m,) * n + (0,) * pad)

    @classmethod
    def tau(cls, r: int, n: int) -> "Signature":
        """((r/2 - 1/2)^n)."""
        return cls((r - 1,) * n)

    @classmethod
    def nu(cls, m: int, n: int) -> "Signature":
        """((m/2 + 1/2)^n, (-m/2 + 1/2)^n), a length-2n signature."""
        return cls((m + 1,) * n + (1 - m,) * n)

    @classmethod
    def staircase(cls, k: int) -> "Signature":
        """delta_k = (k-1, ..., 1, 0)."""
        return cls(tuple(2 * (k - 1 - i) for i in range(k)))

    @property
    def length(self) -> int:
        return len(self.doubled_parts)

    def __len__(self):
        return len(self.doubled_parts)

    @property
    def is_integral(self) -> bool:
        return all(p % 2 == 0 for p in self.doubled_parts)

    @property
    def parity(self) -> int:
        """0 for integer parts, 1 for half-integer parts."""
        return self.doubled_parts[0] % 2 if self.doubled_parts else 0

    @property
    def parts(self) -> tuple:
        return tuple(Fraction(p, 2) if p % 2 else p // 2 for p in self.doubled_parts)

    def int_parts(self) -> tuple:
        if not self.is_integral:
            raise ValueError(f"signature {self.parts} has half-integer parts")
        return tuple(p // 2 for p in self.doubled_parts)

    def padded(self, n: int) -> "Signature":
        if n < self.length:
            raise ValueError(f"cannot pad length {self.length} down to {n}")
        fill = 0 if self.parity == 0 else None
        if fill is None:
            raise ValueError("zero padding is undefined for half-integer signatures")
        return Signature(self.doubled_parts + (0,) * (n - self.length))

    def shifted(self, doubled_shift: int) -> "Signature":
        """Add doubled_shift/2 to every part."""
        return Signature(tuple(p + doubled_shift for p in self.doubled_parts))

    def doubled_shifted_positions(self, n: int | None = None) -> tuple:
        """Doubled l_i = 2*(lambda_i + N - i)."""
        n = self.length if n is None else n
        return tuple(p + 2 * (n - 1 - i) for i, p in enumerate(self.doubled_parts))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def as_signature(lam, n: int | None = None) -> Signature:
    sig = lam if isinstance(lam, Signature) else Signature.of(lam)
    if n is not None and sig.length < n:
        sig = sig.padded(n)
    return sig
