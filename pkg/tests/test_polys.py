from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from tightmaps.polys import (
    p_k,
    p_ke,
    p_multi,
    pi_rse,
    pi_twoface,
    ptilde_k,
    ptilde_multi,
    q_k,
    q_multi,
)

H = Fraction(1, 2)
halves = st.integers(0, 12).map(lambda d: Fraction(d, 2))
ks = st.integers(0, 4)


def test_univariate_values():
    assert [p_k(k, 1) for k in range(4)] == [1, 0, 0, 0]
    assert p_k(1, 2) == 3
    assert [q_k(k, 0) for k in range(4)] == [1, 0, 0, 0]
    assert q_k(1, 1) == 1
    assert q_k(2, 2) == 3
    assert [ptilde_k(k, H) for k in range(4)] == [1, 0, 0, 0]
    assert ptilde_k(0, Fraction(7, 2)) == 1
    assert ptilde_k(1, Fraction(3, 2)) == 2
    assert p_ke(1, 3, Fraction(3, 2)) == 2
    assert p_ke(2, 3, Fraction(3, 2)) == 1
    assert p_k(-1, 3) == 0


def test_all_zero_value():
    for k in range(6):
        assert p_multi(k, [0] * (k + 3)) == (-1) ** k


def test_pi_boundary_values():
    for r, s in itertools.product(range(4), repeat=2):
        assert pi_rse(r, s, 1, 0) == (r == 0 and s == 0)
        assert pi_rse(r, s, 0, 0) == 0
        assert pi_rse(r, s, 0, H) == (r == 0 and s == 0)
        assert pi_rse(r, s, 1, H) == 0
        assert pi_rse(r, s, -1, H) == 0
    assert pi_rse(0, 1, 1, Fraction(3, 2)) == 2
    assert pi_rse(-1, 0, 0, 2) == 0
    assert pi_rse(0, -1, 0, 2) == 0


def test_multivariate_values():
    assert p_multi(1, [1, 1, 1, 1]) == 3
    assert q_multi(1, [1, 1]) == 2
    assert ptilde_multi(0, Fraction(3, 2), Fraction(5, 2), [2]) == 1


def test_two_face_values():
    assert pi_twoface(0, 0, 0, H, H) == 1
    # faces of degree 2, 2 and one petal have odd total degree
    assert pi_twoface(1, 0, 0, 1, 1) == 0
    for k, m1, m2 in itertools.product(range(3), range(1, 4), range(1, 4)):
        assert pi_twoface(0, k, 0, m1, m2) == p_multi(k, [m1, m2])


@given(ks, halves)
def test_q_is_p_plus_previous(k, m):
    assert q_k(k, m) == p_k(k, m) + p_k(k - 1, m)


@given(ks, halves)
def test_p_ke_specialisations(k, m):
    assert p_ke(k, 0, m) == p_k(k, m)
    assert p_ke(k, 1, m) == ptilde_k(k, m)
    assert p_ke(k, 2, m) == q_k(k, m)


@given(ks, st.lists(halves, min_size=1, max_size=4), st.randoms(use_true_random=False))
def test_p_multi_symmetric(k, ms, rnd):
    shuffled = list(ms)
    rnd.shuffle(shuffled)
    assert p_multi(k, ms) == p_multi(k, shuffled)
    assert q_multi(k, ms) == q_multi(k, shuffled)


@given(ks, st.lists(halves, min_size=1, max_size=4))
def test_zero_padding_and_root(k, ms):
    assert p_multi(k, ms + [0]) == p_multi(k, ms)
    assert p_multi(k, [1] + ms) == q_multi(k, ms)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(-1, 1), halves)
def test_pi_relations(r, s, eps, m):
    assert s * pi_rse(r, s, eps, m) == (r + 1) * pi_rse(r + 1, s - 1, eps + 1, m)
    assert pi_rse(r, s, 1, m) == pi_rse(r, s, -1, m) + pi_rse(r - 1, s, -1, m)
    assert s * pi_rse(r, s, 1, m) == (r + 1) * pi_rse(r + 1, s - 1, 0, m) + r * pi_rse(r, s - 1, 0, m)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 1), halves)
def test_pi_non_negative_integer(r, s, eps, m):
    v = pi_rse(r, s, eps, m)
    assert v.denominator == 1 and v >= 0
