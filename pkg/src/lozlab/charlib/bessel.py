"""Float64 batch evaluation of the multivariate Bessel function.

Used for Monte Carlo averages over many y with one fixed x. Repeated x values
are handled by confluent rows; the y are assumed distinct (true almost surely
for eigenvalues of a random matrix).
"""

from __future__ import annotations

from itertools import combinations
from math import factorial

import numpy as np


def _orders(xs):
    seen = {}
    out = []
    for x in xs:
        c = seen.get(x, 0)
        out.append(c)
        seen[x] = c + 1
    return out


def bessel_B_batch(x, Y) -> np.ndarray:
    """B_k(x; y) for every row y of the (S, k) array Y."""
    x = [float(v) for v in x]
    Y = np.atleast_2d(np.asarray(Y, dtype=float))
    k = len(x)
    if Y.shape[1] != k:
        raise ValueError("x and the rows of Y must have the same length")
    orders = _orders(x)
    # row i: (1/p!) d^p/dx^p exp(x y_j) = y_j^p exp(x y_j) / p!
    M = np.empty(Y.shape[:1] + (k, k))
    for i, (xi, p) in enumerate(zip(x, orders)):
        M[:, i, :] = Y ** p * np.exp(xi * Y) / factorial(p)
    num = np.linalg.det(M) if k > 1 else M[:, 0, 0]
    dx = np.array([[_pt(xi, k - 1 - j, p) for j in range(k)] for xi, p in zip(x, orders)])
    dx = np.linalg.det(dx) if k > 1 else 1.0
    dy = np.ones(Y.shape[0])
    sf = 1.0
    for i, j in combinations(range(k), 2):
        dy *= Y[:, i] - Y[:, j]
        sf *= j - i
    return num * sf / (dx * dy)


def _pt(x, e, p):
    if p > e:
        return 0.0
    return factorial(e) // (factorial(p) * factorial(e - p)) * x ** (e - p)
