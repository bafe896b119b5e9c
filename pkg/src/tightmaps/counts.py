"""Counting formulas for planar maps with labeled boundaries.

Inputs are boundary lengths d_i (non-negative integers, not all zero); a
boundary of length 0 is a marked vertex. Half-lengths m_i = d_i / 2 are
formed internally.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from . import indexsets as ix
from .forests import ForestStats, twotype_from_stats
from .numeric import Scalar, as_fraction, binom, falling, half_lengths, ibinom, multinomial
from .polys import HALF, p_multi, pi_rse, ptilde_multi, q_multi, weak_compositions
from .report import Report

METHODS = ("auto", "unified", "bipartite", "quasi", "general")


@dataclass(frozen=True)
class BoundarySpec:
    lengths: tuple[int, ...]

    def __init__(self, lengths: Iterable[int]) -> None:
        object.__setattr__(self, "lengths", tuple(lengths))
        half_lengths(self.lengths)  # validates entries
        if not any(self.lengths):
            raise ValueError("at least one boundary must have positive length")

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def odd_count(self) -> int:
        return sum(d % 2 for d in self.lengths)

    @property
    def ms(self) -> list[Fraction]:
        return half_lengths(self.lengths)


SpecLike = Union[BoundarySpec, Sequence[int]]


def as_spec(spec: SpecLike, min_n: int = 3) -> BoundarySpec:
    spec = spec if isinstance(spec, BoundarySpec) else BoundarySpec(spec)
    if spec.n < min_n:
        raise ValueError(f"need at least {min_n} boundaries, got {spec.n}")
    return spec


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer count, got {x}")
    return int(x)


# tight maps -------------------------------------------------------------------


def _tight_line_petals(ms: Sequence[Fraction]) -> int:
    """Sum over I_n: (sum r)! (sum eps_i s_i) (sum s - 1)! prod pi."""
    n = len(ms)
    return ix.index_sum(ms, ix.fixed_domains(n), ix.w_petal_side, ix.eps_s)


def _tight_line_two_odd(ms: Sequence[Fraction]) -> int:
    n = len(ms)
    return ix.index_sum(ms, ix.fixed_domains(n), ix.w_plain, s_zero=True)


def _tight_line_bipartite(ms: Sequence[Fraction]) -> int:
    n = len(ms)
    return ix.index_sum(ms, ix.fixed_domains(n, (-1, 1)), ix.w_plain, s_zero=True)


def count_tight_unified(spec: SpecLike) -> int:
    """Sum of three index-set sums; at most one is non-zero for a given
    parity pattern (four or more odd lengths, exactly two, none)."""
    ms = as_spec(spec).ms
    return _tight_line_petals(ms) + _tight_line_two_odd(ms) + _tight_line_bipartite(ms)


def count_tight_bipartite(spec: SpecLike) -> int:
    spec = as_spec(spec)
    if spec.odd_count:
        raise ValueError("the bipartite formula needs every length even")
    k = spec.n - 3
    return _as_int(factorial(k) * p_multi(k, spec.ms))


def count_tight_quasibipartite(spec: SpecLike) -> int:
    spec = as_spec(spec)
    if spec.odd_count != 2:
        raise ValueError("the quasi-bipartite formula needs exactly two odd lengths")
    ms = spec.ms
    odd = [i for i, d in enumerate(spec.lengths) if d % 2]
    rest = [m for i, m in enumerate(ms) if i not in odd]
    k = spec.n - 3
    return _as_int(factorial(k) * ptilde_multi(k, ms[odd[0]], ms[odd[1]], rest))


def count_tight_general(spec: SpecLike) -> int:
    spec = as_spec(spec)
    if spec.odd_count < 3:
        raise ValueError("the general formula needs at least three odd lengths")
    return _tight_line_petals(spec.ms)


def count_tight(spec: SpecLike, method: str = "unified") -> int:
    """Number of planar tight maps with the given boundary lengths.

    ``method`` selects the formula: "unified" (valid for every parity
    pattern), "bipartite", "quasi", "general", or "auto" which picks the
    specialised formula matching the number of odd lengths.
    """
    spec = as_spec(spec)
    if method == "unified":
        return count_tight_unified(spec)
    if method == "bipartite":
        return count_tight_bipartite(spec)
    if method == "quasi":
        return count_tight_quasibipartite(spec)
    if method == "general":
        return count_tight_general(spec)
    if method == "auto":
        k = spec.odd_count
        if k % 2:
            return 0
        if k == 0:
            return count_tight_bipartite(spec)
        if k == 2:
            return count_tight_quasibipartite(spec)
        return count_tight_general(spec)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def count_tight_two_marked(spec: SpecLike) -> int:
    """Tight count organised around the first two boundaries, which must
    have positive length: petal necklaces around faces 1 and 2 glued to
    petal trees on the others."""
    ms = as_spec(spec).ms
    if ms[0] <= 0 or ms[1] <= 0:
        raise ValueError("the first two boundaries must have positive length")
    n = len(ms)
    total = 0
    for e3 in (0, 1):

        def stat_first(i: int, eps: int, r: int, s: int, e3: int = e3) -> int:
            return e3 * s if i < 2 else eps * s

        def w_first(R: int, S: int, T: int) -> int:
            if S == 0:
                return factorial(R)
            return factorial(R) * T * factorial(S - 1)

        def stat_second(i: int, eps: int, r: int, s: int, e3: int = e3) -> int:
            return (1 - e3) * r if i < 2 else (1 - eps) * r

        def w_second(R: int, S: int, T: int) -> int:
            if R == 0:
                return factorial(S)
            return factorial(S) * T * factorial(R - 1)

        for head in ((-1, 1), (0, 0)):
            total += ix.index_sum(ms, ix.fixed_domains(n, (*head, e3)), w_first, stat_first)
        for head in ((0, 1), (1, 0)):
            total += ix.index_sum(ms, ix.fixed_domains(n, (*head, e3)), w_second, stat_second)
    return total


def count_tight_vertex_side(spec: SpecLike) -> int:
    """Symmetric form weighting by marked vertices instead of petals."""
    ms = as_spec(spec).ms
    n = len(ms)
    return (
        ix.index_sum(ms, ix.fixed_domains(n), ix.w_vertex_side, ix.epsbar_r)
        + ix.index_sum(ms, ix.fixed_domains(n, (-1, 1)), ix.w_plain, s_zero=True)
        + ix.index_sum(ms, ix.fixed_domains(n), ix.w_r0, r_zero=True)
    )


def pointed_rooted_count(ms: Sequence[Scalar]) -> int:
    """(n-1)! q_{n-1}(m_1, ..., m_n): bipartite tight maps with one extra
    rooted face of degree 2 and one extra marked vertex."""
    ms = [as_fraction(m) for m in ms]
    if not ms or any(m.denominator != 1 for m in ms) or not any(ms):
        raise ValueError("pointed_rooted_count needs integer half-lengths, not all zero")
    n = len(ms)
    return _as_int(factorial(n - 1) * q_multi(n - 1, ms))


# slicings ---------------------------------------------------------------------


def _slice_factor(l: Fraction, r: int, s: int, eps: int) -> int:
    if l == 0:
        return _as_int(pi_rse(r, s, eps, 0))
    top = 2 * l - 1
    parts = [l - Fraction(s + 1 + eps, 2), l - r - Fraction(s + 1 - eps, 2), Fraction(r), Fraction(s)]
    return multinomial(top, parts)


def _slicings_general(ls: Sequence[Fraction]) -> int:
    n = len(ls)
    total = 0
    cap = n - 3
    states: dict[tuple[int, int, int, int], int] = {(0, 0, 0, 0): 1}
    for l in ls:
        opts = []
        for eps in (0, 1):
            for r in range(cap + 1):
                for s in range(cap + 1 - r):
                    v = _slice_factor(l, r, s, eps)
                    if v:
                        opts.append((eps, r, s, v))
        new: dict[tuple[int, int, int, int], int] = {}
        for (E, R, S, T), val in states.items():
            for eps, r, s, v in opts:
                if R + S + r + s <= cap:
                    key = (E + eps, R + r, S + s, T + eps * s)
                    new[key] = new.get(key, 0) + val * v
        states = new
    for (E, R, S, T), val in states.items():
        if E == R + 1 and n - E == S + 2 and S >= 1:
            total += factorial(R) * T * factorial(S - 1) * val
    return total


def slicings(lengths: SpecLike) -> int:
    """Number of planar maps (not necessarily tight) with labeled faces of the
    given degrees; zero-length entries are labeled marked vertices."""
    spec = as_spec(lengths)
    ls = spec.ms
    k = spec.odd_count
    if k % 2:
        return 0
    n = spec.n
    if k >= 4:
        return _slicings_general(ls)
    out = falling(sum(ls) - 1, n - 3)
    for l in ls:
        out *= binom(2 * l - 1, l - HALF) if l.denominator == 2 else binom(2 * l - 1, l)
    return _as_int(out)


def four_odd_slicings(l1: Scalar, l2: Scalar, l3: Scalar, l4: Scalar) -> int:
    ls = [as_fraction(x) for x in (l1, l2, l3, l4)]
    if any(l.denominator != 2 for l in ls):
        raise ValueError("four_odd_slicings takes four half-odd-integers")
    out = sum(ls) - 2
    for l in ls:
        out *= binom(2 * l - 1, l - HALF)
    return _as_int(out)


# tight core substitution ---------------------------------------------------------


def subst_A(l: Scalar, m: Scalar) -> int:
    """Plane forests of 2m trees with l - m edges in total, (2m/2l) binom(2l, l-m)."""
    l, m = as_fraction(l), as_fraction(m)
    if l == 0 and m == 0:
        return 1
    d = l - m
    if d < 0 or d.denominator != 1:
        return 0
    return _as_int(m / l * binom(2 * l, int(d)))


def subst_B(m: Scalar, l: Scalar) -> int:
    """Inverse of subst_A: (-1)^(m-l) binom(m+l-1, m-l)."""
    m, l = as_fraction(m), as_fraction(l)
    d = m - l
    if d < 0 or d.denominator != 1:
        return 0
    return (-1) ** int(d) * ibinom(m + l - 1, int(d))


def _below(x: Fraction) -> list[Fraction]:
    """x, x-1, ... down to 0 or 1/2, same parity as x."""
    out = []
    while x >= 0:
        out.append(x)
        x -= 1
    return out


def slicings_from_tight(lengths: SpecLike) -> int:
    spec = as_spec(lengths)
    if spec.odd_count % 2:
        return 0
    total = 0
    for ms in itertools.product(*(_below(l) for l in spec.ms)):
        if not any(ms):
            continue
        coef = 1
        for l, m in zip(spec.ms, ms):
            coef *= subst_A(l, m)
            if not coef:
                break
        if coef:
            total += coef * count_tight([int(2 * m) for m in ms])
    return total


def tight_from_slicings(lengths: SpecLike) -> int:
    spec = as_spec(lengths)
    if spec.odd_count % 2:
        return 0
    total = 0
    for ls in itertools.product(*(_below(m) for m in spec.ms)):
        if not any(ls):
            continue
        coef = 1
        for m, l in zip(spec.ms, ls):
            coef *= subst_B(m, l)
            if not coef:
                break
        if coef:
            total += coef * slicings([int(2 * l) for l in ls])
    return total


# decorated trees -----------------------------------------------------------------


def decorated_tree_count(eps: int, ms: Sequence[Scalar]) -> int:
    """Labeled typed plane trees with one marked lattice path per vertex.

    Vertex i has type eps_i, r_i children of type 1 and s_i of type 0; the
    root has type ``eps``. Each tree shape is counted by the two-type forest
    formula and each vertex contributes pi_rse(r_i, s_i, eps_i, m_i).
    """
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    ms = [as_fraction(m) for m in ms]
    if not ms or not any(ms):
        raise ValueError("need at least one positive half-length")
    n = len(ms)
    cap = n - 1
    # state: (a, R, S, b^A = sum eps_i s_i, a^B = sum (1-eps_i) r_i)
    states: dict[tuple[int, int, int, int, int], int] = {(0, 0, 0, 0, 0): 1}
    for m in ms:
        opts = []
        for e in (0, 1):
            for r in range(cap + 1):
                for s in range(cap + 1 - r):
                    v = pi_rse(r, s, e, m)
                    if v:
                        opts.append((e, r, s, _as_int(v)))
        new: dict[tuple[int, int, int, int, int], int] = {}
        for (a, R, S, bA, aB), val in states.items():
            for e, r, s, v in opts:
                if R + S + r + s <= cap:
                    key = (a + e, R + r, S + s, bA + e * s, aB + (1 - e) * r)
                    new[key] = new.get(key, 0) + val * v
        states = new
    total = 0
    for (a, R, S, bA, aB), val in states.items():
        b = n - a
        if a == eps + R and b == (1 - eps) + S:
            total += twotype_from_stats(ForestStats(a, b, eps, 1 - eps, aB, bA)) * val
    return total


def _lengths_of(ms: Sequence[Fraction]) -> list[int]:
    return [int(2 * m) for m in ms]


def slice_identities_check(ms_list: Iterable[Sequence[Scalar]]) -> Report:
    """Check, for each half-length list, that decorated trees count tight maps
    with an extra petal or marked vertex, and the subset-sum identity for an
    extra degree-2 face plus marked vertex."""
    rep = Report("slices")
    for ms in ms_list:
        ms = [as_fraction(m) for m in ms]
        if not any(ms):
            continue
        d = _lengths_of(ms)
        n = len(ms)
        for eps in (0, 1):
            rep.check("tree count = tight count", count_tight([*d, 1, eps]), decorated_tree_count(eps, ms), eps=eps, ms=ms)
        if all(m.denominator == 1 for m in ms) or sum(m.denominator == 2 for m in ms) % 2 == 0:
            rhs = decorated_tree_count(1, ms)
            for size in range(1, n):
                for rest in itertools.combinations(range(1, n), size - 1):
                    inside = [0, *rest]
                    outside = [i for i in range(n) if i not in inside]
                    left = [ms[i] for i in inside]
                    right = [ms[i] for i in outside]
                    if any(left) and any(right):
                        rhs += decorated_tree_count(0, left) * decorated_tree_count(0, right)
            rep.check("pointed rooted split", count_tight([*d, 2, 0]), rhs, ms=ms)
    return rep.finish()


# volume ------------------------------------------------------------------------------


def volume_poly(bs: Sequence[Scalar]) -> Fraction:
    """Genus-zero volume: (n-3)!/2^(2n-7) sum over k of prod (b_i^k_i / k_i!)^2."""
    bs = [as_fraction(b) for b in bs]
    n = len(bs)
    if n < 3:
        raise ValueError("the volume needs n >= 3")
    k = n - 3
    total = Fraction(0)
    for comp in weak_compositions(k, n):
        term = Fraction(1)
        for b, ki in zip(bs, comp):
            term *= (b**ki / factorial(ki)) ** 2
        total += term
    return Fraction(factorial(k)) * total / Fraction(2) ** (2 * n - 7)
