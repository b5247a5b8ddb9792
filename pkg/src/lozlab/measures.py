"""Finite weighted point measures with moment and CDF queries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True)
class EmpiricalMeasure:
    """sum_i w_i delta(p_i); points may be exact (Fractions) or floats."""

    points: tuple
    weights: tuple

    def __post_init__(self):
        if len(self.points) != len(self.weights):
            raise ValueError("points and weights differ in length")
        if not self.points:
            raise ValueError("empty measure")

    @classmethod
    def uniform(cls, points) -> "EmpiricalMeasure":
        pts = tuple(points)
        w = Fraction(1, len(pts)) if all(isinstance(p, (int, Fraction)) for p in pts) \
            else 1.0 / len(pts)
        return cls(pts, (w,) * len(pts))

    @property
    def mass(self):
        return sum(self.weights)

    def moment(self, r: int):
        return sum(w * p ** r for p, w in zip(self.points, self.weights))

    def mean(self):
        return self.moment(1) / self.mass

    def cdf(self, t):
        return sum(w for p, w in zip(self.points, self.weights) if p <= t)

    def as_arrays(self):
        return np.asarray(self.points, dtype=float), np.asarray(self.weights, dtype=float)
