from fractions import Fraction as F
from itertools import product

import mpmath as mp
import pytest

from lozlab.charlib import characters as ch
from lozlab.charlib import linalg
from lozlab.charlib.bessel import bessel_B_batch
from lozlab.charlib.jet import Jet
from lozlab.charlib.precision import PrecisionError, half_power, rel_diff, stabilized
from lozlab.charlib.signature import Signature, as_signature


def ssyt_count_brute(lam, values):
    """s_lambda(values) by summing monomials over all fillings (independent oracle)."""
    lam = [p for p in lam if p]
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    N = len(values)
    total = 0
    for vals in product(range(N), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if any((i, j - 1) in t and t[(i, j - 1)] > v for (i, j), v in t.items()):
            continue
        if any((i - 1, j) in t and t[(i - 1, j)] >= v for (i, j), v in t.items()):
            continue
        term = 1
        for v in vals:
            term *= values[v]
        total += term
    return total


# ---------------------------------------------------------------- signatures


def test_signature_basics():
    s = Signature.of([2, 1, 0])
    assert s.parts == (2, 1, 0) and s.is_integral and s.length == 3
    h = Signature.of([F(3, 2), F(1, 2)])
    assert not h.is_integral and h.doubled_parts == (3, 1)
    with pytest.raises(ValueError):
        Signature.of([1, 2])
    with pytest.raises(ValueError):
        Signature.of([F(3, 2), 1])
    assert as_signature((1,), 3).parts == (1, 0, 0)


def test_tau_and_nu_shapes():
    assert Signature.tau(0, 3).parts == (F(-1, 2),) * 3
    assert Signature.tau(3, 2).parts == (1, 1)
    assert Signature.nu(2, 2).parts == (F(3, 2), F(3, 2), F(-1, 2), F(-1, 2))
    assert Signature.nu(0, 2).parts == (F(1, 2),) * 4


# ---------------------------------------------------------------- Schur


@pytest.mark.parametrize("lam,N,want", [((2, 2, 0), 3, 6), ((0, 0, 0, 0), 4, 1), ((1, 0), 2, 2)])
def test_schur_dim_examples(lam, N, want):
    assert ch.schur_dim(lam, N) == want


def test_schur_dim_negative_parts_shift():
    assert ch.schur_dim((1, -1), 2) == ch.schur_dim((2, 0), 2)


@pytest.mark.parametrize("lam,mu,M,want", [((2, 1), (1,), 2, 4), ((2, 1), (2, 1), 7, 1), ((2, 2), (), 2, 1)])
def test_skew_schur_dim_examples(lam, mu, M, want):
    assert ch.skew_schur_dim(lam, mu, M) == want


def test_skew_matches_schur_dim_for_empty_inner():
    for lam in [(3, 1), (2, 2, 1), (4,)]:
        for M in range(1, 5):
            assert ch.skew_schur_dim(lam, (), M) == ch.schur_dim(lam + (0,) * max(0, M - len(lam)), M) \
                if len([p for p in lam if p]) <= M else ch.skew_schur_dim(lam, (), M) == 0


def test_schur_eval_examples():
    assert ch.schur_eval((2, 2, 0), (1, 1, 1)) == 6
    assert ch.schur_eval((0, 0, 0), (F(2, 3), 5, 7)) == 1
    assert ch.schur_eval((1, 0), (3, 1)) == 4


def test_schur_eval_22_at_211_is_17():
    # the monomial sum over the six fillings of shape (2,2) in letters {1,2,3}
    assert ssyt_count_brute((2, 2), (2, 1, 1)) == 17
    assert ch.schur_eval((2, 2, 0), (2, 1, 1)) == 17


def test_schur_eval_matches_brute_force():
    pt = (F(1, 2), 3, F(-2, 3))
    for lam in [(2, 1, 0), (3, 0, 0), (1, 1, 1), (2, 2, 1)]:
        assert ch.schur_eval(lam, pt) == ssyt_count_brute(lam, pt)


def test_schur_eval_confluent_points():
    # repeated points go through derivative rows; compare with the monomial sum
    pt = (2, 2, F(1, 3))
    for lam in [(2, 1, 0), (3, 1, 0)]:
        assert ch.schur_eval(lam, pt) == ssyt_count_brute(lam, pt)


def test_normalized_schur_examples():
    assert ch.normalized_schur((0, 0, 0), 2) == 1
    assert ch.normalized_schur((1, 0), 3, 2) == 2
    assert ch.normalized_schur((2, 2, 0), 2, 3) == F(17, 6)


def test_normalized_schur_residue_vs_determinant_float():
    with mp.workprec(128):
        x = mp.mpf("1.3")
        a = ch.normalized_schur((3, 1, 0, 0), x, 4)
        b = ch.schur_eval((3, 1, 0, 0), [x, 1, 1, 1]) / ch.schur_dim((3, 1, 0, 0), 4)
        assert rel_diff(a, b) < 1e-30


# ---------------------------------------------------------------- symplectic and orthogonal


def test_symplectic_trivial_and_small():
    assert ch.symplectic_eval((0, 0), (2, 3)) == 1
    # chi_(1) for Sp(4) is the sum of x_i + 1/x_i
    assert ch.symplectic_eval((1, 0), (2, 3)) == 2 + F(1, 2) + 3 + F(1, 3)
    assert ch.normalized_symplectic((0, 0, 0), 2, 3) == 1


def test_symplectic_denominator_forms():
    pts = (F(2), F(-1, 3), F(5, 2))
    d = ch.symplectic_denominator(pts, "determinant")
    assert d == ch.symplectic_denominator(pts, "product")


def test_normalized_symplectic_paths_agree():
    for lam in [(1, 0), (2, 1), (3, 3, 1)]:
        for x in (F(3), F(-1, 2), F(7, 3)):
            N = len(lam)
            assert ch.normalized_symplectic(lam, x, N) == ch.normalized_symplectic(lam, x, N, method="confluent")


def test_tau_normalized_half_integer_is_finite():
    with mp.workprec(160):
        a = ch.normalized_symplectic(Signature.tau(2, 2), 2, 2)
        b = ch.normalized_symplectic(Signature.tau(2, 2), 2, 2, method="confluent")
        assert mp.isfinite(a) and rel_diff(a, b) < 1e-30


def test_symplectic_to_schur_relation():
    for lam in [(2, 1), (3, 0), (1, 1, 1)]:
        sig = Signature.of(lam)
        N = len(lam)
        for x in (F(2), F(-3, 4)):
            lhs = ch.normalized_symplectic(sig, x, N)
            rhs = F(2) / (x + 1) * ch.normalized_schur(ch.schur_relation_signature(sig), x, 2 * N)
            assert lhs == rhs


def test_orthogonal_paths():
    assert ch.orthogonal_eval((1, 0), (4, 9)) == ch.orthogonal_eval((1, 0), (4, 9), method="determinant")
    with mp.workprec(128):
        a = ch.orthogonal_eval((1, 0), (2, 3))
        b = ch.orthogonal_eval((1, 0), (2, 3), method="determinant")
        assert rel_diff(a, b) < 1e-30
    assert ch.orthogonal_eval((0, 0), (5, 7)) == 1


def test_phi_equals_orthogonal_character():
    for pts in [(F(4), F(9)), (F(1, 4), F(25, 9))]:
        assert ch.phi_m_eval(2, pts) == pts[0] * pts[1] * ch.orthogonal_eval((1, 1), pts)


# ---------------------------------------------------------------- boxed sums


def test_phi_examples():
    assert ch.phi_m_eval(0, (F(2), F(3))) == 1
    assert ch.phi_m_eval(2, (1, 1)) == 10
    for m in range(5):
        assert ch.phi_m_eval(m, (1,)) == m + 1


def test_phi_2_at_21_is_23():
    assert ch.phi_m_eval(2, (2, 1), method="brute") == 23
    assert ch.phi_m_eval(2, (2, 1)) == 23
    assert sum(ssyt_count_brute(lam, (2, 1)) for lam in ch.box_partitions(2, 2)) == 23


def test_Phi_examples():
    assert ch.Phi_m_eval(2, (2,), 2) == F(23, 10)
    assert ch.Phi_m_eval(3, (1, 1), 3) == 1
    x = F(1, 2)
    assert ch.Phi_m_eval(3, (x,), 1) == sum(x ** j for j in range(4)) / 4


def test_Phi_paths_agree():
    for m, n, pts in [(2, 3, (F(2), F(1, 3))), (3, 2, (F(-2), F(5))), (1, 4, (F(3),))]:
        a = ch.Phi_m_eval(m, pts, n)
        assert a == ch.Phi_m_eval(m, pts, n, method="symplectic")
        if len(pts) == 1:
            assert a == ch.Phi_m_eval(m, pts, n, method="residue")


def test_Phi_univariate_matches():
    with mp.workprec(128):
        x = mp.mpf("1.1")
        assert rel_diff(ch.Phi_m_univariate(4, x, 5), ch.Phi_m_eval(4, (x,), 5)) < 1e-30


def test_phi_count_product_formula():
    for m in range(4):
        for n in range(1, 4):
            assert ch.phi_m_count(m, n) == ch.phi_m_eval(m, (1,) * n)


def test_line_one_law():
    assert ch.line_one_law(3, 1) == [F(1, 4)] * 4
    law = ch.line_one_law(3, 2)
    assert sum(law) == 1 and law == law[::-1]


# ---------------------------------------------------------------- Bessel and beta shift


def test_bessel_examples():
    assert ch.bessel_B((F(3, 2),), (F(1, 3),)) == pytest.approx(float(mp.e ** 0.5))
    with mp.workprec(128):
        v = ch.bessel_B((1, 0), (1, 0))
        assert abs(v - (mp.e - 1)) < mp.mpf(10) ** -30


def test_bessel_scaling_identity():
    with mp.workprec(128):
        x, y, al = [mp.mpf("0.3"), mp.mpf("-1.1")], [mp.mpf("0.7"), mp.mpf("0.2")], mp.mpf("1.7")
        a = ch.bessel_B(x, [al * v for v in y])
        b = ch.bessel_B([al * v for v in x], y)
        assert rel_diff(a, b) < 1e-30


def test_bessel_confluent_and_batch():
    import numpy as np
    with mp.workprec(128):
        ref = ch.bessel_B((0.5, 0.5, -1.0), (1.0, 0.25, 0.0))
    got = bessel_B_batch([0.5, 0.5, -1.0], np.array([[1.0, 0.25, 0.0]]))[0]
    assert got == pytest.approx(float(ref), rel=1e-10)


@pytest.mark.parametrize("lam,N,x", [((0, 0, 0, 0), 4, 4), ((2, 1, 0), 3, 9)])
def test_beta_shift_exact(lam, N, x):
    r = ch.beta_shift_check(lam, N, 2, x)
    assert r["rel_diff"] == 0


def test_beta_shift_half_integer_signature():
    r = ch.beta_shift_check(Signature.of([F(1, 2)] * 4), 4, 2, 4)
    assert r["rel_diff"] < 1e-20


def test_beta_shift_irrational_root():
    r = ch.beta_shift_check((2, 1, 0), 3, F(3, 2), F(5, 2))
    assert r["rel_diff"] < 1e-20


# ---------------------------------------------------------------- linear algebra and precision


def test_det_int_and_exact():
    assert linalg.det_int([[2, 1], [1, 3]]) == 5
    assert linalg.det_exact([[F(1, 2), 1], [1, F(1, 3)]]) == F(1, 6) - 1
    assert linalg.det_int([[1, 2], [2, 4]]) == 0


def test_det_float_scaled_matrix():
    with mp.workprec(200):
        A = [[mp.mpf(10) ** (40 * i) * (i + j + 1) ** (j + 1) for j in range(4)] for i in range(4)]
        ref = linalg.det_exact([[F(int(mp.nint(v))) for v in row] for row in A])
        assert rel_diff(linalg.det_float(A), mp.mpf(ref.numerator) / ref.denominator) < 1e-40


def test_half_power_exact_on_squares():
    assert half_power(F(9, 4), 3) == F(27, 8)
    assert not isinstance(half_power(F(2), 1), F)


def test_stabilized_raises_when_unstable():
    calls = []

    def noisy():
        calls.append(mp.mp.prec)
        return mp.mpf(len(calls))

    with pytest.raises(PrecisionError):
        stabilized(noisy, start_bits=128, max_bits=512)


def test_confluence_limit_matches_nearby_points():
    # a repeated point is the limit of nearby distinct points (first-order extrapolation)
    lam = (3, 1, 0)
    exact = F(ch.schur_eval(lam, (2, 2, F(1, 3))))
    for h in (F(1, 10 ** 6), F(1, 10 ** 7)):
        near = ch.schur_eval(lam, (2, 2 + h, F(1, 3)))
        assert abs(near - exact) < 100 * h


# ---------------------------------------------------------------- jets


def test_jet_arithmetic_against_taylor():
    with mp.workprec(256):
        u = Jet.variable(8)
        f = (u * 2 + 3).ln() + (u * u).exp() / (u + 1)
        g = lambda t: mp.log(2 * t + 3) + mp.exp(t * t) / (t + 1)  # noqa: E731
        ref = mp.taylor(g, 1, 8)
        for a, b in zip(f.coeffs, ref):
            assert abs(a - b) < mp.mpf(10) ** -60


def test_jet_sqrt_pow_compose():
    with mp.workprec(256):
        u = Jet.variable(6)
        s = (u + 3).sqrt()
        ref = mp.taylor(lambda t: mp.sqrt(t + 3), 1, 6)
        assert all(abs(a - b) < mp.mpf(10) ** -60 for a, b in zip(s.coeffs, ref))
        p = (u + 1) ** 3
        ref = mp.taylor(lambda t: (t + 1) ** 3, 1, 6)
        assert all(abs(a - b) < mp.mpf(10) ** -60 for a, b in zip(p.coeffs, ref))
        c = s.compose(u * u)
        ref = mp.taylor(lambda t: mp.sqrt(t * t + 3), 1, 6)
        assert all(abs(a - b) < mp.mpf(10) ** -60 for a, b in zip(c.coeffs, ref))


def test_Phi_at_reciprocal_float_points():
    # x and 1/x share z = x + 1/x; float inputs one ulp apart must still be confluent
    with mp.workprec(256):
        t = mp.mpf(1) / 2
        pts = [mp.exp(-t), mp.exp(t), mp.exp(t)]
        a = ch.Phi_m_eval(4, pts, 4)
        b = ch.phi_m_eval(4, pts + [1], method="brute") / ch.phi_m_count(4, 4)
        assert rel_diff(a, b) < 1e-60
