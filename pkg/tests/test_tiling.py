from collections import Counter
from fractions import Fraction as F
from itertools import product

import pytest

from lozlab import tiling
from lozlab.charlib import characters as ch
from lozlab.tiling import GTPattern

FIGURE_TABLEAU = [[1, 1, 2, 5], [3, 4, 4], [5, 5, 5]]


def brute_patterns(n, m):
    """Every interlacing triangle with entries in [0, m], by filtering all arrays."""
    cells = n * (n + 1) // 2
    out = []
    for vals in product(range(m + 1), repeat=cells):
        rows, i = [], 0
        for k in range(1, n + 1):
            rows.append(vals[i:i + k])
            i += k
        try:
            out.append(GTPattern(tuple(rows), m))
        except ValueError:
            pass
    return out


def test_pattern_validation():
    GTPattern(((1,), (2, 0)), 2)
    with pytest.raises(ValueError):
        GTPattern(((1,), (0, 2)), 2)
    with pytest.raises(ValueError):
        GTPattern(((2,), (1, 0)), 2)
    with pytest.raises(ValueError):
        GTPattern(((3,),), 2)


def test_json_round_trip():
    p = GTPattern(((1,), (2, 0), (2, 1, 0)), 2)
    assert p.to_json() == "[[1],[2,0],[2,1,0]]"
    assert GTPattern.from_json(p.to_json(), 2) == p


def test_figure_tableau():
    p = tiling.from_ssyt(FIGURE_TABLEAU, 5)
    assert p.rows == ((2,), (3, 0), (3, 1, 0), (3, 3, 0, 0), (4, 3, 3, 0, 0))
    assert p.rows[2] == (3, 1, 0)
    assert tiling.to_ssyt(p) == FIGURE_TABLEAU


def test_empty_tableau():
    p = tiling.from_ssyt([], 3, 2)
    assert p.rows == ((0,), (0, 0), (0, 0, 0))


def test_ssyt_rejects_bad_input():
    with pytest.raises(ValueError):
        tiling.from_ssyt([[2, 1]], 3)
    with pytest.raises(ValueError):
        tiling.from_ssyt([[1, 2], [1, 3]], 3)
    with pytest.raises(ValueError):
        tiling.from_ssyt([[1, 4]], 3)


def test_ssyt_round_trip_exhaustive():
    for n in range(1, 4):
        for m in range(0, 3):
            for p in tiling.enumerate_free(n, m):
                assert tiling.from_ssyt(tiling.to_ssyt(p), n, m) == p


def test_positions_examples():
    rows = ((3,), (4, 0), (4, 3, 0))
    p = GTPattern(rows, 4)
    assert tiling.positions(p, 3) == (6, 4, 0)
    z = GTPattern(((0,), (0, 0), (0, 0, 0)), 1)
    for k in range(1, 4):
        assert tiling.positions(z, k) == tuple(range(k - 1, -1, -1))
    assert tiling.positions(GTPattern(((1,), (2, 0)), 2), 2) == (3, 0)


def test_positions_strictly_decrease_and_interlace():
    for p in tiling.enumerate_free(3, 3):
        for k in range(1, 3):
            a, b = tiling.positions(p, k), tiling.positions(p, k + 1)
            assert all(b[i] > a[i] >= b[i + 1] for i in range(k))


@pytest.mark.parametrize("n,m,want", [(1, 3, 4), (2, 2, 10), (3, 0, 1)])
def test_enumerate_free_examples(n, m, want):
    pats = list(tiling.enumerate_free(n, m))
    assert len(pats) == want == tiling.count_free(n, m)
    assert len(set(pats)) == want


def test_enumeration_matches_brute_force():
    for n, m in [(1, 4), (2, 3), (3, 2)]:
        assert sorted(p.rows for p in tiling.enumerate_free(n, m)) == sorted(p.rows for p in brute_patterns(n, m))


def test_enumeration_is_lexicographic():
    pats = [p.rows for p in tiling.enumerate_free(3, 2)]
    assert pats == sorted(pats)


def test_count_free_examples():
    for m in range(8):
        assert tiling.count_free(1, m) == m + 1
    for n in range(1, 5):
        assert tiling.count_free(n, 0) == 1
    assert tiling.count_free(2, 2) == 10
    assert tiling.count_free(4, 4) == 2772


@pytest.mark.parametrize("n,m,want", [(1, 1, 2), (2, 0, 1), (2, 1, 6)])
def test_hexagon_examples(n, m, want):
    pats = list(tiling.enumerate_hex(n, m))
    assert len(pats) == want == tiling.count_hex(n, m)
    for p in pats:
        assert p.top == (m,) * n + (0,) * n


def test_hexagon_count_is_weyl_dimension():
    for n, m in [(2, 2), (3, 1), (2, 3)]:
        assert tiling.count_hex(n, m) == ch.schur_dim((m,) * n + (0,) * n, 2 * n)


def test_enumeration_cap():
    with pytest.raises(tiling.CapExceeded):
        list(tiling.enumerate_free(4, 4, cap=100))


def test_row_count_marginals():
    pats = list(tiling.enumerate_free(3, 2))
    for k in range(1, 4):
        c = Counter(p.rows[k - 1] for p in pats)
        for y, cnt in c.items():
            assert tiling.row_count(3, 2, y) == cnt


def test_profile_examples():
    assert tiling.profile_eval((0, 0, 0), 2) == 2
    assert tiling.profile_eval((0, 0, 0), -5) == 1
    assert tiling.profile_eval((1, 0), F(1, 2)) == F(3, 2)


def test_profile_is_continuous_and_lipschitz():
    lam = (3, 1, 1, 0)
    xs = [F(i, 4) for i in range(-30, 20)]
    vals = [tiling.profile_eval(lam, x) for x in xs]
    assert all(abs(b - a) == F(1, 4) for a, b in zip(vals, vals[1:]))


def test_counting_measure_examples():
    m = tiling.counting_measure((2, 0))
    assert sorted(m.points) == [0, F(3, 2)] and list(m.weights) == [F(1, 2), F(1, 2)]
    N = 5
    z = tiling.counting_measure((0,) * N)
    for r in range(4):
        assert z.moment(r) == sum(F(j, N) ** r for j in range(N)) / N
