from math import pi, sqrt

import numpy as np
import pytest

from lozlab import gue
from lozlab.charlib.bessel import bessel_B_batch
from lozlab.sampler import RngStream
from lozlab.stats import ks_normal


def test_jacobi_matches_numpy():
    r = RngStream(3)
    for k in (1, 2, 5, 16):
        A = gue.gue_matrix(k, r)
        assert np.allclose(A, A.conj().T)
        ours = np.sort(gue.eigvals_hermitian(A))
        assert np.allclose(ours, np.linalg.eigvalsh(A), atol=1e-11)


def test_k1_is_standard_normal():
    levels = gue.sample_gue_corners_batch(1, 100000, RngStream(4))[0][:, 0]
    assert ks_normal(levels) <= 0.006


def test_corners_interlace():
    r = RngStream(5)
    for _ in range(200):
        c = gue.sample_gue_corners(4, r)
        assert c.interlacing_violations() == 0
        assert [len(l) for l in c.levels] == [1, 2, 3, 4]


def test_k2_spacing_against_weighted_oracle():
    # E|e1 - e2| under Delta^2 exp(-|e|^2/2): reweight iid normal pairs by Delta^2
    r = RngStream(6)
    z = r.normal((400000, 2))
    d = np.abs(z[:, 0] - z[:, 1])
    oracle = np.sum(d ** 3) / np.sum(d ** 2)
    assert oracle == pytest.approx(4 / sqrt(pi), rel=0.01)
    lv = gue.sample_gue_corners_batch(2, 50000, RngStream(7))[1]
    sp = lv[:, 0] - lv[:, 1]
    se = sp.std() / sqrt(len(sp))
    assert abs(sp.mean() - 4 / sqrt(pi)) < 4 * se


def test_density_examples():
    assert gue.gue_density(1, [0.0]) == pytest.approx(1 / sqrt(2 * pi))
    e = np.array([0.3, -1.2, 2.0])
    assert gue.gue_density(3, e) == pytest.approx(gue.gue_density(3, -e[::-1]))
    assert gue.gue_density(3, e) == pytest.approx(gue.gue_density(3, e[[2, 0, 1]]))


@pytest.mark.parametrize("k", [2, 3])
def test_density_mass_by_importance_sampling(k):
    s = 1.6
    z = RngStream(8).normal((400000, k)) * s
    q = np.exp(-0.5 * np.sum(z * z, axis=1) / s ** 2) / (2 * pi * s * s) ** (k / 2)
    w = gue.gue_density(k, z) / q
    assert abs(w.mean() - 1) <= max(0.01, 4 * w.std() / sqrt(len(w)))


def test_mgf_examples():
    assert gue.mgf_gue([0, 0, 0]) == 1
    assert gue.mgf_gue([1]) == pytest.approx(1.6487212707)
    assert gue.mgf_gue([1, -1]) == pytest.approx(np.e)


def test_mgf_mc_k2():
    est, se = gue.mgf_gue_mc([1.0, -1.0], 2, 100000, RngStream(9))
    assert abs(est - np.e) <= 3 * se


def test_bessel_batch_k1():
    Y = np.array([[0.5], [-2.0]])
    assert np.allclose(bessel_B_batch([1.5], Y), np.exp(1.5 * Y[:, 0]))


def test_jacobi_rejects_non_hermitian():
    with pytest.raises(ValueError):
        gue.eigvals_hermitian(np.array([[0, 1], [2, 0]], dtype=complex))
