"""Sums over the index tuples (eps, r, s) that drive the non-bipartite counts.

A tuple assigns to boundary i a type eps_i, a number r_i of marked vertices
and a number s_i of petals, subject to

    sum eps_i = sum r_i + 1,   sum (1 - eps_i) = sum s_i + 2,

so that sum r + sum s = n - 3. Each tuple carries the weight
prod_i pi_rse(r_i, s_i, eps_i, m_i) times a factor depending on the totals.

Two evaluators are provided: ``iter_index_tuples`` lists tuples literally,
and ``index_sum`` folds the product coordinate by coordinate, keeping only
the totals (sum eps, sum r, sum s, and one linear statistic).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Sequence

from .polys import pi_rse, weak_compositions

Domain = Sequence[int]
Stat = Callable[[int, int, int, int], int]
Weight = Callable[[int, int, int], int]

I_N = "I_n"
I_S0 = "I_s0"
I_M11_S0 = "I_m11_s0"
VARIANTS = (I_N, I_S0, I_M11_S0)


@dataclass(frozen=True)
class QuasiIndexTuple:
    eps: tuple[int, ...]
    r: tuple[int, ...]
    s: tuple[int, ...]

    def weight(self, ms: Sequence[Fraction]) -> Fraction:
        out = Fraction(1)
        for e, r, s, m in zip(self.eps, self.r, self.s, ms):
            out *= pi_rse(r, s, e, m)
            if not out:
                break
        return out


def iter_index_tuples(domains: Sequence[Domain]) -> Iterator[QuasiIndexTuple]:
    """Every tuple whose eps_i lies in domains[i], in a fixed order."""
    n = len(domains)
    for eps in itertools.product(*domains):
        total = sum(eps)
        R, S = total - 1, n - total - 2
        if R < 0 or S < 0:
            continue
        for r in weak_compositions(R, n):
            for s in weak_compositions(S, n):
                yield QuasiIndexTuple(tuple(eps), r, s)


def fixed_domains(n: int, head: Sequence[int] = ()) -> list[tuple[int, ...]]:
    """First coordinates pinned to ``head``, the rest free in {0, 1}."""
    return [(e,) for e in head] + [(0, 1)] * (n - len(head))


def index_set(n: int, variant: str = I_N) -> Iterator[QuasiIndexTuple]:
    """The sets I_n (sum s >= 1), I_{s=0}, and I^{(-1,1)}_{s=0}."""
    if n < 3:
        raise ValueError("index sets need n >= 3")
    if variant == I_N:
        return (t for t in iter_index_tuples(fixed_domains(n)) if sum(t.s) >= 1)
    if variant == I_S0:
        return (t for t in iter_index_tuples(fixed_domains(n)) if sum(t.s) == 0)
    if variant == I_M11_S0:
        return (t for t in iter_index_tuples(fixed_domains(n, (-1, 1))) if sum(t.s) == 0)
    raise ValueError(f"unknown index set variant {variant!r}")


def _no_stat(i: int, eps: int, r: int, s: int) -> int:
    return 0


_SHIFT = 6
_MASK = (1 << _SHIFT) - 1
_E0 = 1 << (_SHIFT - 1)


def _pack(E: int, R: int, S: int, T: int) -> int:
    return (E + _E0) | R << _SHIFT | S << 2 * _SHIFT | T << 3 * _SHIFT


@lru_cache(maxsize=None)
def _options(m: Fraction, dom: tuple[int, ...], cap: int, r_zero: bool, s_zero: bool) -> tuple:
    out = []
    for eps in dom:
        for r in range(1) if r_zero else range(cap + 1):
            for s in range(cap + 1 - r):
                if s_zero and s:
                    break
                v = pi_rse(r, s, eps, m)
                if v:
                    assert v.denominator == 1
                    out.append((r + s, eps, r, s, int(v)))
    out.sort(key=lambda o: o[0])
    return tuple(out)


def index_sum(
    ms: Sequence[Fraction],
    domains: Sequence[Domain],
    weight: Weight,
    stat: Stat = _no_stat,
    r_zero: bool = False,
    s_zero: bool = False,
) -> int:
    """Sum over tuples of weight(R, S, T) * prod pi, with T = sum_i stat(i, ...).

    ``r_zero``/``s_zero`` restrict to tuples with every r_i (resp. s_i) zero.
    Tuples with a vanishing product are never visited. States are the totals
    (sum eps, sum r, sum s, T) packed into one integer, since every total
    is additive over coordinates.
    """
    n = len(ms)
    cap = n - 3
    if cap < 0:
        return 0
    if n >= _E0 or cap > _MASK:
        raise ValueError("too many boundaries for the packed index sum")
    states: dict[int, int] = {_pack(0, 0, 0, 0): 1}
    for i, (m, dom) in enumerate(zip(ms, domains)):
        opts = [
            (rs, _pack(eps, r, s, stat(i, eps, r, s)) - _E0, v)
            for rs, eps, r, s, v in _options(m, tuple(dom), cap, r_zero, s_zero)
        ]
        new: dict[int, int] = {}
        get = new.get
        for key, val in states.items():
            room = cap - (key >> _SHIFT & _MASK) - (key >> 2 * _SHIFT & _MASK)
            for rs, delta, v in opts:
                if rs > room:
                    break
                k2 = key + delta
                new[k2] = get(k2, 0) + val * v
        states = new
        if not states:
            return 0
    total = 0
    for key, val in states.items():
        E = (key & _MASK) - _E0
        R = key >> _SHIFT & _MASK
        S = key >> 2 * _SHIFT & _MASK
        T = key >> 3 * _SHIFT
        if E == R + 1 and n - E == S + 2 and val:
            total += weight(R, S, T) * val
    return total


def index_sum_literal(
    ms: Sequence[Fraction],
    domains: Sequence[Domain],
    weight: Weight,
    stat: Stat = _no_stat,
    r_zero: bool = False,
    s_zero: bool = False,
) -> Fraction:
    """Same as ``index_sum`` by listing every tuple; for cross-checking."""
    total = Fraction(0)
    for t in iter_index_tuples(domains):
        if (r_zero and any(t.r)) or (s_zero and any(t.s)):
            continue
        w = t.weight(ms)
        if w:
            T = sum(stat(i, e, r, s) for i, (e, r, s) in enumerate(zip(t.eps, t.r, t.s)))
            total += weight(sum(t.r), sum(t.s), T) * w
    return total


# common weights and statistics ------------------------------------------------


def eps_s(i: int, eps: int, r: int, s: int) -> int:
    return eps * s


def epsbar_r(i: int, eps: int, r: int, s: int) -> int:
    return (1 - eps) * r


def w_petal_side(R: int, S: int, T: int) -> int:
    """r! (s-1)! T, restricted to s >= 1."""
    return factorial(R) * factorial(S - 1) * T if S >= 1 else 0


def w_vertex_side(R: int, S: int, T: int) -> int:
    """(r-1)! s! T, restricted to r >= 1."""
    return factorial(R - 1) * factorial(S) * T if R >= 1 else 0


def w_plain(R: int, S: int, T: int) -> int:
    return factorial(R) * factorial(S)


def w_r0(R: int, S: int, T: int) -> int:
    return factorial(S) if R == 0 else 0


def at(j: int, f: Callable[[int, int, int], int]) -> Stat:
    """Statistic supported on coordinate j only."""
    return lambda i, eps, r, s: f(eps, r, s) if i == j else 0
