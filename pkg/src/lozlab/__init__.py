"""Lozenge tilings of a half-hexagon with a free boundary.

Subpackages: ``charlib`` (characters and exact arithmetic), ``sampler``
(exact and Markov-chain samplers), ``harness`` (verification suites and CLI).
Modules ``tiling``, ``gue`` and ``limitshape`` hold the tiling model, the
GUE-corners reference and the analytic limit shape.
"""

from .gue import CornersSample, gue_density, mgf_gue, sample_gue_corners
from .limitshape import MomentVector, empirical_moments, hexagon_moments, limit_moment, psi_value
from .sampler import RngStream, exact_sample_free, exact_sample_hex, mcmc_sample_free, mcmc_sample_hex
from .tiling import GTPattern, count_free, count_hex, enumerate_free, enumerate_hex, positions

__version__ = "0.1.0"

__all__ = [
    "CornersSample", "GTPattern", "MomentVector", "RngStream", "count_free", "count_hex",
    "empirical_moments", "enumerate_free", "enumerate_hex", "exact_sample_free",
    "exact_sample_hex", "gue_density", "hexagon_moments", "limit_moment", "mcmc_sample_free",
    "mcmc_sample_hex", "mgf_gue", "positions", "psi_value", "sample_gue_corners",
]
