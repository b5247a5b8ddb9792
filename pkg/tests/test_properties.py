from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from lozlab import tiling
from lozlab.charlib import characters as ch
from lozlab.harness.suites import _skew_brute
from lozlab.sampler import RngStream, exact_sample_free

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@st.composite
def partitions(draw, length, max_part):
    parts = draw(st.lists(st.integers(0, max_part), min_size=length, max_size=length))
    return tuple(sorted(parts, reverse=True))


@settings(max_examples=40, deadline=None)
@given(partitions(3, 3), st.lists(rationals, min_size=3, max_size=3), st.permutations(range(3)))
def test_schur_is_symmetric(lam, pts, perm):
    assert ch.schur_eval(lam, pts) == ch.schur_eval(lam, [pts[i] for i in perm])


@settings(max_examples=30, deadline=None)
@given(partitions(3, 3), st.integers(1, 3), st.data())
def test_skew_jacobi_trudi_matches_fillings(lam, M, data):
    mu = tuple(data.draw(st.integers(0, lam[i])) for i in range(3))
    mu = tuple(sorted(mu, reverse=True))
    if any(m > l for m, l in zip(mu, lam)):
        return
    assert ch.skew_schur_dim(lam, mu, M) == _skew_brute(lam, mu, M)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 5), st.integers(0, 2 ** 31))
def test_ssyt_round_trip_on_random_tilings(n, m, seed):
    p = exact_sample_free(n, m, RngStream(seed))
    t = tiling.to_ssyt(p)
    assert tiling.from_ssyt(t, n, m) == p
    assert all(a <= b for row in t for a, b in zip(row, row[1:]))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3), st.lists(rationals.filter(lambda q: q not in (0, 1, -1)), min_size=2, max_size=2, unique=True))
def test_macdonald_identity(m, pts):
    assert ch.phi_m_eval(m, pts) == ch.phi_m_eval(m, pts, method="brute")


@settings(max_examples=25, deadline=None)
@given(partitions(2, 3), rationals.filter(lambda q: q not in (0, -1)))
def test_symplectic_paths(lam, x):
    assert ch.normalized_symplectic(lam, x, 2) == ch.normalized_symplectic(lam, x, 2, method="confluent")
