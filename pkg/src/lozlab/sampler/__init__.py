"""Exact and Markov-chain samplers of lozenge tilings."""

from .exact import TooLarge, downward_weights, exact_sample_free, exact_sample_hex
from .lines import REGIMES, regime_scale, rescale_positions, sample_line_one
from .mcmc import (ChainRows, SamplerReport, batch_means_se, default_burn_in,
                   mcmc_sample_free, mcmc_sample_hex)
from .rng import RngStream

__all__ = [
    "REGIMES", "ChainRows", "RngStream", "SamplerReport", "TooLarge", "batch_means_se",
    "default_burn_in", "downward_weights", "exact_sample_free", "exact_sample_hex",
    "mcmc_sample_free", "mcmc_sample_hex", "regime_scale", "rescale_positions",
    "sample_line_one",
]
