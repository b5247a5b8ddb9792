"""Seeded, splittable random streams."""

from __future__ import annotations

import numpy as np


class RngStream:
    """Reproducible stream keyed by (seed, stream id).

    Distinct stream ids are separate spawn keys of one SeedSequence, so they
    are independent by construction.
    """

    def __init__(self, seed: int, stream: int = 0):
        if seed < 0 or stream < 0:
            raise ValueError("seed and stream id must be non-negative")
        self.seed = int(seed)
        self.stream = int(stream)
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        self._bits = np.random.PCG64(ss)
        self.gen = np.random.Generator(self._bits)

    def child(self, stream: int) -> "RngStream":
        """A stream derived from this one; used to fan out chains."""
        return RngStream(self.seed, self.stream * 1_000_003 + stream + 1)

    def random(self, size=None):
        """Uniform floats in [0, 1)."""
        return self.gen.random(size)

    def normal(self, size) -> np.ndarray:
        """Standard Gaussians by the Box-Muller transform."""
        shape = tuple(size) if not np.isscalar(size) else (int(size),)
        size = int(np.prod(shape))
        half = (size + 1) // 2
        u1 = 1.0 - self.gen.random(half)     # in (0, 1]
        u2 = self.gen.random(half)
        r = np.sqrt(-2.0 * np.log(u1))
        z = np.concatenate([r * np.cos(2 * np.pi * u2), r * np.sin(2 * np.pi * u2)])
        return z[:size].reshape(shape)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) for arbitrarily large n (rejection on raw words)."""
        if n <= 0:
            raise ValueError("randbelow needs a positive bound")
        bits = n.bit_length()
        words = (bits + 63) // 64
        extra = words * 64 - bits
        while True:
            r = 0
            for _ in range(words):
                r = (r << 64) | int(self._bits.random_raw())
            r >>= extra
            if r < n:
                return r

    def integers(self, low: int, high: int, size=None):
        return self.gen.integers(low, high, size=size)

    def uint32(self) -> int:
        """A seed for an inner generator (e.g. a compiled chain)."""
        return int(self.gen.integers(0, 2 ** 32 - 1))

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream={self.stream})"
