from __future__ import annotations

from fractions import Fraction

import pytest

from tightmaps.counts import count_tight, slicings
from tightmaps.mapgen import (
    DartCapExceeded,
    DartMap,
    degree_profile,
    enumerate_involutions,
    face_permutation,
    oracle_count,
    oracle_sweep_both,
)


def test_involution_counts():
    assert sum(1 for _ in enumerate_involutions(2)) == 1
    assert sum(1 for _ in enumerate_involutions(4)) == 3
    assert sum(1 for _ in enumerate_involutions(12)) == 10395
    assert sum(1 for _ in enumerate_involutions(3)) == 0
    parts = [sum(1 for _ in enumerate_involutions(8, first_partner=y)) for y in range(1, 8)]
    assert parts == [15] * 7


def test_face_permutation_convention():
    # faces are consecutive dart blocks, each cycled forwards
    assert face_permutation([3, 2]) == [1, 2, 0, 4, 3]


def test_dart_map_vertices():
    m = DartMap(tuple(face_permutation([2, 2])), (2, 3, 0, 1))
    assert m.sigma == (3, 2, 1, 0)
    assert m.is_planar() and m.is_connected()
    assert sorted(m.vertex_degrees()) == [2, 2]
    split = DartMap(tuple(face_permutation([2, 2])), (1, 0, 3, 2))
    assert not split.is_connected()


def test_cap():
    with pytest.raises(DartCapExceeded):
        oracle_count([6, 6], cap=10)
    with pytest.raises(DartCapExceeded):
        list(enumerate_involutions(20, cap=16))


def test_oracle_examples():
    assert oracle_count([2, 2, 2]) == 1
    assert oracle_count([1, 1, 1, 3]) == 2
    assert oracle_count([2, 2], tight=False) == Fraction(1, 2)
    assert oracle_count([3, 1, 1, 1], tight=False) == 2


def test_parallel_matches_serial():
    assert oracle_count([4, 2, 2, 0], jobs=2) == oracle_count([4, 2, 2, 0], jobs=1)


def test_profile_is_connected_planar():
    prof = degree_profile([2, 2])
    assert sum(prof.values()) == 2


@pytest.mark.parametrize("max_total", [8])
def test_small_sweep(max_total):
    rows = list(oracle_sweep_both(max_total))
    assert any(0 in ds for ds, _, _ in rows)
    for ds, tight, plain in rows:
        assert tight == count_tight(list(ds))
        assert plain == slicings(list(ds))
