from collections import Counter
from fractions import Fraction as F
from math import sqrt

import numpy as np
import pytest

from lozlab import tiling
from lozlab.sampler import (ChainRows, RngStream, TooLarge, batch_means_se, default_burn_in,
                            downward_weights, exact_sample_free, exact_sample_hex,
                            mcmc_sample_free, mcmc_sample_hex, regime_scale, rescale_positions,
                            sample_line_one)
from lozlab.sampler.lines import line_one_weights
from lozlab.stats import chi2_uniform_pvalue, tv_distance


def counts_over(patterns, n, m, hexagon=False):
    universe = list(tiling.enumerate_hex(n, m) if hexagon else tiling.enumerate_free(n, m))
    c = Counter(patterns)
    assert set(c) <= set(universe)
    return [c[p] for p in universe]


# ---------------------------------------------------------------- rng


def test_rng_streams_reproducible_and_independent():
    a, b = RngStream(5), RngStream(5)
    assert a.random(4).tolist() == b.random(4).tolist()
    assert RngStream(5, 1).random() != RngStream(5, 2).random()
    assert RngStream(5).child(3).random() == RngStream(5).child(3).random()


def test_randbelow_big_and_uniform():
    r = RngStream(1)
    big = 10 ** 40
    assert all(0 <= r.randbelow(big) < big for _ in range(200))
    draws = [r.randbelow(6) for _ in range(60000)]
    assert chi2_uniform_pvalue(np.bincount(draws, minlength=6)) > 0.001


def test_box_muller_normal_moments():
    z = RngStream(2).normal(200000)
    assert abs(z.mean()) < 0.01 and abs(z.var() - 1) < 0.015


# ---------------------------------------------------------------- exact sampler


def test_downward_weights_sum_to_one():
    for row in [(2, 1, 0), (3, 3, 0, 0), (4, 2)]:
        w = downward_weights(row)
        assert sum(w.values()) == 1 and all(v > 0 for v in w.values())


def test_exact_free_uniform_n1_m3():
    r = RngStream(11)
    draws = [exact_sample_free(1, 3, r).rows[0][0] for _ in range(10000)]
    assert chi2_uniform_pvalue(np.bincount(draws, minlength=4)) > 0.001


def test_exact_free_uniform_n2_m2():
    r = RngStream(12)
    cnt = counts_over([exact_sample_free(2, 2, r) for _ in range(100000)], 2, 2)
    assert len(cnt) == 10 and chi2_uniform_pvalue(cnt) > 0.001


def test_exact_free_degenerate():
    r = RngStream(0)
    for _ in range(5):
        assert exact_sample_free(2, 0, r).rows == ((0,), (0, 0))
        assert exact_sample_hex(2, 0, r).rows == ((0,), (0, 0), (0, 0, 0), (0, 0, 0, 0))


@pytest.mark.parametrize("n,m,size", [(1, 1, 2), (2, 1, 6)])
def test_exact_hex_uniform(n, m, size):
    r = RngStream(13)
    cnt = counts_over([exact_sample_hex(n, m, r) for _ in range(10000)], n, m, hexagon=True)
    assert len(cnt) == size and chi2_uniform_pvalue(cnt) > 0.001


def test_exact_sampler_cap():
    with pytest.raises(TooLarge):
        exact_sample_free(30, 30, RngStream(0), cap=1000)


def test_exact_sampler_reproducible():
    a = [exact_sample_free(5, 4, RngStream(3)) for _ in range(3)]
    b = [exact_sample_free(5, 4, RngStream(3)) for _ in range(3)]
    assert a == b


# ---------------------------------------------------------------- line one


def test_line_one_law_against_enumeration():
    for n, m in [(2, 3), (3, 2), (4, 4)]:
        c = Counter(p.rows[0][0] for p in tiling.enumerate_free(n, m))
        total = sum(c.values())
        w = line_one_weights(n, m)
        assert [F(c[j], total) for j in range(m + 1)] == [F(v, sum(w)) for v in w]


def test_sample_line_one_range():
    y = sample_line_one(50, 6, 1000, RngStream(4))
    assert y.min() >= 0 and y.max() <= 6


# ---------------------------------------------------------------- rescaling


def test_rescaling_examples():
    n = m = 10
    assert rescale_positions([m / 2], n, m)[0] == 0
    assert regime_scale(n, n, "standard") == pytest.approx(sqrt(3 * n / 8))
    assert regime_scale(100, 9, "wide") == regime_scale(10 ** 6, 9, "wide") == 6
    assert regime_scale(16, 4096, "tall") == pytest.approx(4096 / sqrt(128))
    with pytest.raises(ValueError):
        regime_scale(5, 0, "standard")


# ---------------------------------------------------------------- mcmc


def test_mcmc_tv_small():
    r = RngStream(21)
    chain, rep = mcmc_sample_free(2, 2, r, 20000, burn_in=1000, thin=10)
    cnt = counts_over(list(chain.patterns()), 2, 2)
    assert tv_distance(cnt, [0.1] * 10) < 0.03
    assert rep.samples == 20000 and rep.thin == 10


def test_mcmc_single_entry_uniform():
    chain, _ = mcmc_sample_free(1, 5, RngStream(22), 12000, thin=3)
    draws = chain.positions(1)[:, 0]
    assert chi2_uniform_pvalue(np.bincount(draws, minlength=6)) > 0.001


def test_mcmc_frozen_when_m_zero():
    chain, _ = mcmc_sample_free(3, 0, RngStream(0), 50)
    assert {p.rows for p in chain.patterns()} == {((0,), (0, 0), (0, 0, 0))}


def test_mcmc_hexagon_uniform():
    chain, _ = mcmc_sample_hex(2, 1, RngStream(23), 12000, burn_in=500, thin=5)
    pats = list(chain.patterns())
    assert all(p.top == (1, 1, 0, 0) for p in pats)
    cnt = counts_over(pats, 2, 1, hexagon=True)
    assert chi2_uniform_pvalue(cnt) > 0.001


def test_mcmc_reproducible_and_keep_rows():
    a, _ = mcmc_sample_free(6, 5, RngStream(9), 40, keep_rows=[1, 3])
    b, _ = mcmc_sample_free(6, 5, RngStream(9), 40, keep_rows=[1, 3])
    assert isinstance(a, ChainRows)
    assert np.array_equal(a.rows[3], b.rows[3]) and set(a.rows) == {1, 3}
    Y = a.positions(3)
    assert Y.shape == (40, 3) and np.all(np.diff(Y, axis=1) < 0)


def test_default_burn_in_scales():
    assert default_burn_in(10, 10) == 10 * 20 ** 2


def test_batch_means_se_iid():
    x = RngStream(1).normal(100000)
    assert batch_means_se(x) == pytest.approx(1 / sqrt(len(x)), rel=0.4)
