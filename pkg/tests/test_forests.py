from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tightmaps.forests import (
    A,
    B,
    O,
    ForestStats,
    TypeArray,
    consistent_arrays,
    count_onetype,
    count_twotype,
    count_twotype_constrained,
    enumerate_forests,
    rotate_roots,
    tally_all_forests,
    twotype_from_stats,
)


def test_onetype_values():
    assert count_onetype(3, (2, 0, 0)) == 2
    assert count_onetype(3, (1, 1, 1)) == 0
    assert count_onetype(4, (0, 0, 0, 0)) == 6


def test_twotype_degenerate_cases():
    assert twotype_from_stats(ForestStats(0, 0, 0, 0, 0, 0)) == 1
    for a in range(1, 6):
        for a_o in range(1, a + 1):
            assert twotype_from_stats(ForestStats(a, 0, a_o, 0, 0, 0)) == a_o * [1, 1, 2, 6, 24, 120][a - 1]


def test_inconsistent_array_rejected():
    with pytest.raises(ValueError, match="consisten"):
        TypeArray((O, A), (A, A)).check_consistent()
    assert not TypeArray((O, A), (A, A)).is_consistent()


def test_single_vertex():
    w = TypeArray((O, A), (A,))
    assert count_twotype(w) == 1
    assert count_twotype_constrained(w) == 1
    assert len(list(enumerate_forests(w))) == 1


def test_mixed_small_instances():
    w = TypeArray((O, A), (A, B), (B,))
    assert count_twotype(w) == len(list(enumerate_forests(w)))
    w = TypeArray((O, B, A), (B,), (A,))
    assert count_twotype(w) == len(list(enumerate_forests(w)))
    w = TypeArray((O, B, A), (A,), (B,))
    assert count_twotype_constrained(w) == len(list(enumerate_forests(w, constrained=True)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_forms_exhaustive_small(n):
    everything, first = tally_all_forests(n)
    for w in consistent_arrays(n):
        assert count_twotype(w) == everything.get(w.w, 0)
        if w.w[1][0] == A:
            assert count_twotype_constrained(w) == first.get(w.w, 0)


arrays = st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(consistent_arrays(n))))


@settings(max_examples=60, deadline=None)
@given(arrays, st.integers(0, 5))
def test_root_rotation_invariance(w, j):
    assert count_twotype(rotate_roots(w, j)) == count_twotype(w)


@settings(max_examples=60, deadline=None)
@given(arrays)
def test_enumerator_matches_formula(w):
    assert len(set(enumerate_forests(w))) == count_twotype(w)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rotating_the_first_tree(n):
    # vertex 1 lies in exactly one tree; rotating the roots covers each choice
    for w in consistent_arrays(n):
        if w.w[1][0] != A:
            continue
        roots = len(w.w[0]) - 1
        assert sum(count_twotype_constrained(rotate_roots(w, j)) for j in range(roots)) == count_twotype(w)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_single_type_specialisation(n):
    for w in consistent_arrays(n):
        if any(t == B for row in w.w for t in row):
            continue
        kids = tuple(len(row) - 1 for row in w.w[1:])
        assert count_twotype_constrained(w) == count_onetype(n, kids)
        assert count_twotype(w) == (len(w.w[0]) - 1) * count_onetype(n, kids)
