from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.utilities.iterables import multiset_permutations

from tightmaps.codes import (
    DM,
    DP,
    E,
    U,
    Form,
    MarkedPath,
    WordError,
    all_marked_paths,
    all_marked_trees,
    count_marked_paths,
    enumerate_decorated_families,
    enumerate_words,
    forbidden_factor,
    iso_key,
    parse_word,
    petal_tree_to_word,
    petal_trees,
    tree_to_word,
    word_to_petal_tree,
    word_to_tree,
)
from tightmaps.counts import decorated_tree_count
from tightmaps.polys import p_k, pi_rse, ptilde_k, q_k

H = Fraction(1, 2)


def brute_words(letters: dict, check) -> set:
    """Every arrangement of the letter multiset passing ``check``."""
    pool = [x for x, c in letters.items() for _ in range(c)]
    return {tuple(w) for w in multiset_permutations(pool) if forbidden_factor(w) is None and check(w)}


def test_word_examples():
    assert list(enumerate_words(Form.UDFORM1, 2, 0)) == [parse_word("DM DP U U")]
    assert len(list(enumerate_words(Form.UDFORM1, 2, 1))) == 3
    assert list(enumerate_words(Form.UDFORM3, Fraction(3, 2), 0)) == [parse_word("DP U")]


@pytest.mark.parametrize("m,k", [(m, k) for m in range(1, 6) for k in range(0, 4)])
def test_udform_words_match_brute_force(m, k):
    w1 = brute_words({DM: k + 1, DP: m - k - 1, U: m}, lambda w: w[0] == DM) if k + 1 <= m else set()
    assert set(enumerate_words(Form.UDFORM1, m, k)) == w1
    assert len(w1) == p_k(k, m)
    w2 = brute_words({DM: k, DP: m - k, U: m}, lambda w: w[-1] == U) if k <= m else set()
    assert set(enumerate_words(Form.UDFORM2, m, k)) == w2
    assert len(w2) == q_k(k, m)


@pytest.mark.parametrize("d,k", [(d, k) for d in (1, 3, 5, 7, 9) for k in range(0, 4)])
def test_udform3_words_match_brute_force(d, k):
    m = Fraction(d, 2)
    half = (d - 1) // 2
    w3 = brute_words({DM: k, DP: half - k, U: half}, lambda w: True) if k <= half else set()
    assert set(enumerate_words(Form.UDFORM3, m, k)) == w3
    assert len(w3) == ptilde_k(k, m)


@pytest.mark.parametrize(
    "d,r,s,eps", [(d, r, s, e) for d in range(1, 8) for r in range(3) for s in range(3) for e in (-1, 0, 1)]
)
def test_petal_words_match_brute_force(d, r, s, eps):
    m = Fraction(d, 2)
    ups = m - Fraction(s + 1 + eps, 2)
    downs = m - r - Fraction(s + 1 - eps, 2)
    if ups.denominator == 1 and ups >= 0 and downs >= 0:
        expected = brute_words({DM: r, E: s, U: int(ups), DP: int(downs)}, lambda w: True)
    else:
        expected = set()
    got = list(enumerate_words(Form.PETAL, m, r=r, s=s, eps=eps))
    assert len(got) == len(set(got))
    assert set(got) == expected
    assert len(got) == pi_rse(r, s, eps, m)


def test_malformed_words_name_index():
    with pytest.raises(WordError) as e:
        word_to_tree(parse_word("DM U DP U"), Form.UDFORM1)
    assert e.value.index == 2
    with pytest.raises(WordError) as e:
        word_to_tree(parse_word("DP U"), Form.UDFORM1)
    assert e.value.index == 0
    with pytest.raises(WordError):
        word_to_tree(parse_word("E"), Form.UDFORM2)
    with pytest.raises(WordError):
        word_to_petal_tree(parse_word("U U DM"))


@pytest.mark.parametrize(
    "form,d", [(Form.UDFORM1, d) for d in (2, 4, 6, 8)] + [(Form.UDFORM2, d) for d in (2, 4, 6, 8)] + [(Form.UDFORM3, d) for d in (1, 3, 5, 7)]
)
def test_tree_word_bijection(form, d):
    m = Fraction(d, 2)
    for k in range(4):
        trees = all_marked_trees(form, m, k)
        words = set(enumerate_words(form, m, k))
        assert {tree_to_word(t, form) for t in trees} == words
        assert len(trees) == len(words)
        for w in words:
            t = word_to_tree(w, form)
            assert tree_to_word(t, form) == w
        for t in trees:
            assert iso_key(word_to_tree(tree_to_word(t, form), form)) == iso_key(t)


def test_petal_tree_round_trip():
    counts = []
    for n in range(4):
        trees = list(petal_trees(n))
        counts.append(len(trees))
        for t in trees:
            assert word_to_petal_tree(petal_tree_to_word(t)) == t
    assert counts == [1, 2, 8, 40]


def test_marked_path_examples():
    assert count_marked_paths(2, 1, []) == 1 == q_k(0, 1)
    assert count_marked_paths(2, 1, [1]) == 1 == q_k(1, 1)
    assert count_marked_paths(3, 0, []) == 1 == ptilde_k(0, Fraction(3, 2))
    assert count_marked_paths(0, 1, []) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(-1, 1), st.lists(st.integers(0, 1), max_size=3))
def test_marked_path_dp_matches_brute_force(d, eps, marks):
    brute = [p for p in all_marked_paths(d, eps) if list(p.child_types) == marks]
    assert all(isinstance(p, MarkedPath) and p.is_valid() for p in brute)
    assert count_marked_paths(d, eps, marks) == len(brute)


@pytest.mark.parametrize("eps,ms", [(1, [1]), (1, [1, 1]), (0, [Fraction(3, 2)]), (0, [1, H, H]), (1, [Fraction(3, 2), H])])
def test_decorated_family_enumeration(eps, ms):
    assert sum(1 for _ in enumerate_decorated_families(eps, ms)) == decorated_tree_count(eps, ms)


def test_decorated_family_cap():
    with pytest.raises(ValueError):
        list(enumerate_decorated_families(1, [1] * 7))
