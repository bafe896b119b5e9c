"""Brute-force enumeration of planar maps with labeled boundaries.

A map on darts 0..D-1 is a pair (phi, alpha): phi is fixed with cycles
(0 .. d_1-1)(d_1 .. d_1+d_2-1)... one per positive-length boundary, alpha
runs over all fixed-point-free involutions, and vertices are the cycles of
sigma = alpha o phi. A pair is kept when <phi, alpha> is transitive and
V - E + F = 2. Zero-length boundaries are marked vertices, placed
injectively on the vertices of each kept map.

Fixing phi with labeled cycles hits each isomorphism class prod(d_i)/|Aut|
times, so dividing the raw count by prod(d_i) gives the 1/|Aut|-weighted
count.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

DEFAULT_DART_CAP = 16


class DartCapExceeded(RuntimeError):
    pass


def dart_cap() -> int:
    return int(os.environ.get("TIGHTMAPS_DART_CAP", DEFAULT_DART_CAP))


def _check_cap(n_darts: int, cap: int | None) -> None:
    cap = dart_cap() if cap is None else cap
    if n_darts > cap:
        raise DartCapExceeded(f"{n_darts} darts exceeds the cap of {cap} (set TIGHTMAPS_DART_CAP to raise it)")


def face_permutation(degrees: Sequence[int]) -> list[int]:
    phi = []
    start = 0
    for d in degrees:
        phi.extend(start + (j + 1) % d for j in range(d))
        start += d
    return phi


def enumerate_involutions(n_darts: int, first_partner: int | None = None, cap: int | None = None) -> Iterator[list[int]]:
    """All fixed-point-free involutions of range(n_darts) as lists.

    ``first_partner`` restricts to involutions pairing dart 0 with it, which
    splits the stream into n_darts - 1 disjoint parts.
    """
    if n_darts % 2:
        return
    _check_cap(n_darts, cap)
    alpha = [-1] * n_darts
    if n_darts == 0:
        yield []
        return

    def rec() -> Iterator[list[int]]:
        try:
            x = alpha.index(-1)
        except ValueError:
            yield list(alpha)
            return
        for y in range(x + 1, n_darts):
            if alpha[y] == -1:
                if x == 0 and first_partner is not None and y != first_partner:
                    continue
                alpha[x], alpha[y] = y, x
                yield from rec()
                alpha[x] = alpha[y] = -1

    yield from rec()


@dataclass(frozen=True)
class DartMap:
    phi: tuple[int, ...]
    alpha: tuple[int, ...]

    @property
    def n_darts(self) -> int:
        return len(self.phi)

    @property
    def sigma(self) -> tuple[int, ...]:
        return tuple(self.alpha[self.phi[x]] for x in range(self.n_darts))

    def vertex_degrees(self) -> list[int]:
        return cycle_lengths(self.sigma)

    def is_connected(self) -> bool:
        return _connected(self.phi, self.alpha)

    def is_planar(self) -> bool:
        v = len(self.vertex_degrees())
        return v - self.n_darts // 2 + len(cycle_lengths(self.phi)) == 2


def cycle_lengths(perm: Sequence[int]) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for x in range(len(perm)):
        if not seen[x]:
            n = 0
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                n += 1
            out.append(n)
    return out


def _connected(phi: Sequence[int], alpha: Sequence[int]) -> bool:
    parent = list(range(len(phi)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(len(phi)):
        for y in (phi[x], alpha[x]):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    root = find(0)
    return all(find(x) == root for x in range(len(phi)))


def degree_profile(degrees: Sequence[int], first_partner: int | None = None, cap: int | None = None) -> Counter:
    """Multiset of sorted vertex-degree tuples over all planar connected
    involutions for faces of the given positive degrees."""
    n_darts = sum(degrees)
    phi = face_permutation(degrees)
    n_faces = len(degrees)
    target_v = 2 + n_darts // 2 - n_faces
    out: Counter = Counter()
    if n_darts % 2 or target_v < 1:
        _check_cap(n_darts, cap)
        return out
    for alpha in enumerate_involutions(n_darts, first_partner, cap):
        sigma = [alpha[phi[x]] for x in range(n_darts)]
        lens = cycle_lengths(sigma)
        if len(lens) != target_v:
            continue
        if not _connected(phi, alpha):
            continue
        out[tuple(sorted(lens))] += 1
    return out


def _profile_parallel(degrees: Sequence[int], jobs: int, cap: int | None) -> Counter:
    n_darts = sum(degrees)
    if jobs <= 1 or n_darts < 4:
        return degree_profile(degrees, cap=cap)
    _check_cap(n_darts, cap)
    from concurrent.futures import ProcessPoolExecutor

    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_profile_part, [(tuple(degrees), y, cap) for y in range(1, n_darts)])
        for part in parts:
            total.update(part)
    return total


def _profile_part(args: tuple) -> Counter:
    degrees, y, cap = args
    return degree_profile(degrees, first_partner=y, cap=cap)


def marked_placements(vertex_degrees: Sequence[int], n_marked: int, tight: bool) -> int:
    """Injective placements of n_marked labeled marks on the vertices,
    keeping only those that mark every degree-1 vertex when ``tight``."""
    count = 0
    leaves = [v for v, deg in enumerate(vertex_degrees) if deg == 1]
    for chosen in itertools.permutations(range(len(vertex_degrees)), n_marked):
        if tight and any(v not in chosen for v in leaves):
            continue
        count += 1
    return count


def count_from_profile(profile: Counter, degrees: Sequence[int], n_marked: int, tight: bool) -> Fraction:
    raw = sum(mult * marked_placements(vdeg, n_marked, tight) for vdeg, mult in profile.items())
    return Fraction(raw, prod(degrees))


def oracle_count(lengths: Sequence[int], tight: bool = True, jobs: int = 1, cap: int | None = None) -> Fraction:
    """1/|Aut|-weighted number of planar maps with the given boundaries."""
    lengths = list(lengths)
    if any(d < 0 for d in lengths):
        raise ValueError("lengths must be non-negative")
    degrees = [d for d in lengths if d > 0]
    if not degrees:
        raise ValueError("at least one boundary must have positive length")
    profile = _profile_parallel(degrees, jobs, cap)
    return count_from_profile(profile, degrees, len(lengths) - len(degrees), tight)


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of total into positive parts, largest first."""
    max_part = total if max_part is None else max_part
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first, *rest)


def oracle_sweep(max_total_degree: int, max_zeros: int = 2, tight: bool = True, min_n: int = 3, cap: int | None = None):
    """Rows (lengths, oracle value) for every multiset of positive degrees
    with sum <= max_total_degree, padded with 0..max_zeros marked vertices,
    keeping n >= min_n. Positive degrees come first, largest first."""
    for total in range(1, max_total_degree + 1):
        for degs in partitions(total):
            needed = [z for z in range(max_zeros + 1) if len(degs) + z >= min_n]
            if not needed:
                continue
            profile = degree_profile(degs, cap=cap)
            for z in needed:
                yield (*degs, *([0] * z)), count_from_profile(profile, degs, z, tight)


def oracle_sweep_both(max_total_degree: int, max_zeros: int = 2, min_n: int = 3, cap: int | None = None):
    """Like ``oracle_sweep`` but yields (lengths, tight value, non-tight value)
    from a single enumeration per degree multiset."""
    for total in range(1, max_total_degree + 1):
        for degs in partitions(total):
            needed = [z for z in range(max_zeros + 1) if len(degs) + z >= min_n]
            if not needed:
                continue
            profile = degree_profile(degs, cap=cap)
            for z in needed:
                yield (
                    (*degs, *([0] * z)),
                    count_from_profile(profile, degs, z, True),
                    count_from_profile(profile, degs, z, False),
                )
