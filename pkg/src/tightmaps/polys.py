"""Univariate and multivariate polynomial families counting tight maps.

Every function evaluates exactly at a rational point. Half-lengths ``m``
may be given as ``int``, ``Fraction`` or ``HalfInt``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .numeric import Scalar, as_fraction, binom, factorial
from .report import Report

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def _pke(k: int, e: int, m: Fraction) -> Fraction:
    if k < 0:
        return Fraction(0)
    shift = Fraction(e, 2)
    out = Fraction(1)
    for i in range(1, k + 1):
        out *= m * m - (i - shift) ** 2
    return out / factorial(k) ** 2


def p_ke(k: int, e: int, m: Scalar) -> Fraction:
    """prod_{i=1..k} (m^2 - (i - e/2)^2) / (k!)^2, and 0 for k < 0.

    The values e = 0, 1, 2 give p_k, ptilde_k and q_k.
    """
    return _pke(k, e, as_fraction(m))


def p_k(k: int, m: Scalar) -> Fraction:
    return _pke(k, 0, as_fraction(m))


def q_k(k: int, m: Scalar) -> Fraction:
    return _pke(k, 2, as_fraction(m))


def ptilde_k(k: int, m: Scalar) -> Fraction:
    return _pke(k, 1, as_fraction(m))


@lru_cache(maxsize=None)
def _pi(r: int, s: int, eps: int, m: Fraction) -> Fraction:
    if r < 0 or s < 0:
        return Fraction(0)
    e = s + 1 + eps
    if (m - Fraction(e, 2)).denominator != 1:
        return Fraction(0)
    return binom(r + s, s) * _pke(r + s, e, m)


def pi_rse(r: int, s: int, eps: int, m: Scalar) -> Fraction:
    """Petal-tree quasi-polynomial: binom(r+s, s) p_{r+s, s+1+eps}(m) on its
    parity support (m - (s+1+eps)/2 integral), zero elsewhere.

    Negative r or s give 0, which keeps recurrences branch-free.
    """
    return _pi(r, s, eps, as_fraction(m))


def weak_compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Tuples of n non-negative integers summing to k, lexicographic order."""
    if n == 0:
        if k == 0:
            yield ()
        return
    if n == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in weak_compositions(k - first, n - 1):
            yield (first,) + rest


def _convolve(columns: Sequence[Sequence[Fraction]], k: int) -> Fraction:
    # coefficient of t^k in prod_i sum_j columns[i][j] t^j
    acc = [Fraction(0)] * (k + 1)
    acc[0] = Fraction(1)
    for col in columns:
        new = [Fraction(0)] * (k + 1)
        for a, va in enumerate(acc):
            if va:
                for b in range(k + 1 - a):
                    new[a + b] += va * col[b]
        acc = new
    return acc[k]


def p_multi(k: int, ms: Sequence[Scalar]) -> Fraction:
    """Sum over k_1+...+k_n = k of p_{k_1}(m_1) q_{k_2}(m_2) ... q_{k_n}(m_n)."""
    if k < 0:
        return Fraction(0)
    ms = [as_fraction(m) for m in ms]
    if not ms:
        raise ValueError("p_multi needs at least one argument")
    cols = [[p_k(j, ms[0]) for j in range(k + 1)]]
    cols += [[q_k(j, m) for j in range(k + 1)] for m in ms[1:]]
    return _convolve(cols, k)


def q_multi(k: int, ms: Sequence[Scalar]) -> Fraction:
    if k < 0:
        return Fraction(0)
    ms = [as_fraction(m) for m in ms]
    if not ms:
        raise ValueError("q_multi needs at least one argument")
    return _convolve([[q_k(j, m) for j in range(k + 1)] for m in ms], k)


def ptilde_multi(k: int, m1: Scalar, m2: Scalar, rest: Sequence[Scalar] = ()) -> Fraction:
    """Sum over compositions of ptilde_{k1}(m1) ptilde_{k2}(m2) prod q_{ki}(m_i)."""
    if k < 0:
        return Fraction(0)
    cols = [[ptilde_k(j, m1) for j in range(k + 1)], [ptilde_k(j, m2) for j in range(k + 1)]]
    cols += [[q_k(j, m) for j in range(k + 1)] for m in rest]
    return _convolve(cols, k)


def p_multi_alt(k: int, ms: Sequence[Scalar]) -> Fraction:
    """Symmetric expansion: sum over k_0+k_1+...+k_n = k of
    binom(n-1, k_0) prod p_{k_i}(m_i)."""
    n = len(ms)
    total = Fraction(0)
    for comp in weak_compositions(k, n + 1):
        term = binom(n - 1, comp[0])
        if not term:
            continue
        for ki, m in zip(comp[1:], ms):
            term *= p_k(ki, m)
            if not term:
                break
        total += term
    return total


def pi_twoface(eps0: int, r0: int, s0: int, m1: Scalar, m2: Scalar) -> Fraction:
    """Petal necklaces with two non-petal faces of half-lengths m1, m2.

    eps0 = 0: one distinguished marked vertex; eps0 = 1: one distinguished
    petal. r0 further marked vertices, s0 further petals, all unlabeled.
    """
    if eps0 == 0:
        pairs = ((-1, 1), (0, 0))
    elif eps0 == 1:
        pairs = ((0, 1), (1, 0))
    else:
        raise ValueError("eps0 must be 0 or 1")
    total = Fraction(0)
    for r1 in range(r0 + 1):
        for s1 in range(s0 + 1):
            for e1, e2 in pairs:
                total += pi_rse(r1, s1, e1, m1) * pi_rse(r0 - r1, s0 - s1, e2, m2)
    return total


# ---------------------------------------------------------------------------
# identity suite


def _halves(d_max: int, parity: int | None = None, start: int = 0) -> list[Fraction]:
    return [Fraction(d, 2) for d in range(start, d_max + 1) if parity is None or d % 2 == parity]


def _int_range_below(m: Fraction) -> range:
    return range(1, int(m))


def _half_range_below(m: Fraction) -> list[Fraction]:
    return [Fraction(2 * j + 1, 2) for j in range(int(m - HALF))]


def p_string_rhs(k: int, ms: Sequence[Fraction]) -> Fraction:
    out = (sum(ms) - k - 1) * p_multi(k, ms)
    for i, mi in enumerate(ms):
        for j in _int_range_below(mi):
            out += 2 * j * p_multi(k, [*ms[:i], Fraction(j), *ms[i + 1 :]])
    return out


def ptilde_string_rhs(k: int, m1: Fraction, m2: Fraction, rest: Sequence[Fraction]) -> Fraction:
    out = (m1 + m2 + sum(rest) - k - 1) * ptilde_multi(k, m1, m2, rest)
    for j in _half_range_below(m1):
        out += 2 * j * ptilde_multi(k, j, m2, rest)
    for j in _half_range_below(m2):
        out += 2 * j * ptilde_multi(k, m1, j, rest)
    for i, mi in enumerate(rest):
        for j in _int_range_below(mi):
            out += 2 * j * ptilde_multi(k, m1, m2, [*rest[:i], Fraction(j), *rest[i + 1 :]])
    return out


def verify_poly_identities(
    k_max: int = 4, m_max: int = 4, n_max: int = 6, multi_d_max: int = 5
) -> Report:
    """Check the univariate and multivariate identities exactly.

    Univariate checks use k <= k_max and half-lengths up to m_max.
    Multivariate checks use up to n_max arguments with 2 m_i <= multi_d_max;
    symmetric families are checked on sorted argument lists, and symmetry
    itself is checked over all orderings for n <= 4.
    """
    rep = Report("polys")
    d_max = 2 * m_max
    every = _halves(d_max)
    ints = _halves(d_max, parity=0)
    odds = _halves(d_max, parity=1)

    for k in range(k_max + 1):
        for m in every:
            rep.check("q=p+p_prev", q_k(k, m), p_k(k, m) + p_k(k - 1, m), k=k, m=m)
            rep.check("p even", p_k(k, m), p_k(k, -m), k=k, m=m)
            rep.check("p_ke(0)=p", p_ke(k, 0, m), p_k(k, m), k=k, m=m)
            rep.check("p_ke(1)=ptilde", p_ke(k, 1, m), ptilde_k(k, m), k=k, m=m)
            rep.check("p_ke(2)=q", p_ke(k, 2, m), q_k(k, m), k=k, m=m)
            for e in range(-2, 2 * k_max + 3):
                closed = binom(m + Fraction(e, 2) - 1, k) * binom(m - Fraction(e, 2) + k, k)
                rep.check("p_ke binomial form", closed, p_ke(k, e, m), k=k, e=e, m=m)
                if k >= 1:
                    rep.check(
                        "p_ke dilaton-like",
                        k * p_ke(k, e + 2, m),
                        k * p_ke(k, e, m) + (k - e) * p_ke(k - 1, e, m),
                        k=k, e=e, m=m,
                    )
        for m in ints:
            if m >= 1:
                rhs = (m - k - 1) * p_k(k, m) + sum((2 * j * p_k(k, j) for j in _int_range_below(m)), Fraction(0))
                rep.check("p univariate string", (k + 1) * p_k(k + 1, m), rhs, k=k, m=m)
                rhs = (m - k) * q_k(k, m) + sum((2 * j * q_k(k, j) for j in _int_range_below(m)), Fraction(0))
                rep.check("q univariate string", (k + 1) * q_k(k + 1, m), rhs, k=k, m=m)
            rep.check("p integral", 1, p_k(k, m).denominator, k=k, m=m)
            rep.check("q integral", 1, q_k(k, m).denominator, k=k, m=m)
        for m in odds:
            rhs = (m - k - HALF) * ptilde_k(k, m) + sum(
                (2 * j * ptilde_k(k, j) for j in _half_range_below(m)), Fraction(0)
            )
            rep.check("ptilde univariate string", (k + 1) * ptilde_k(k + 1, m), rhs, k=k, m=m)
            rep.check("ptilde integral", 1, ptilde_k(k, m).denominator, k=k, m=m)

    # relations between the petal-tree quasi-polynomials
    for r in range(k_max + 1):
        for s in range(k_max + 1):
            for m in every:
                for eps in range(-2, 3):
                    rep.check(
                        "s pi = (r+1) pi shifted",
                        s * pi_rse(r, s, eps, m),
                        (r + 1) * pi_rse(r + 1, s - 1, eps + 1, m),
                        r=r, s=s, eps=eps, m=m,
                    )
                rep.check(
                    "pi1 = pi-1 + pi-1 prev",
                    pi_rse(r, s, 1, m),
                    pi_rse(r, s, -1, m) + pi_rse(r - 1, s, -1, m),
                    r=r, s=s, m=m,
                )
                rep.check(
                    "s pi1 = pi0 combination",
                    s * pi_rse(r, s, 1, m),
                    (r + 1) * pi_rse(r + 1, s - 1, 0, m) + r * pi_rse(r, s - 1, 0, m),
                    r=r, s=s, m=m,
                )
                for eps in (-1, 0, 1):
                    v = pi_rse(r, s, eps, m)
                    if m > 0 or eps >= 0:
                        rep.check("pi non-negative integer", True, v.denominator == 1 and v >= 0, r=r, s=s, eps=eps, m=m)

    # multivariate, symmetric families on sorted arguments
    vals = _halves(multi_d_max)
    int_vals = _halves(multi_d_max, parity=0)
    odd_vals = _halves(multi_d_max, parity=1)
    for n in range(1, n_max + 1):
        for ms in itertools.combinations_with_replacement(vals, n):
            ms = list(ms)
            for k in range(k_max + 1):
                pm = p_multi(k, ms)
                rep.check("p alternative form", pm, p_multi_alt(k, ms), k=k, ms=ms)
                rep.check("adding a root", q_multi(k, ms), p_multi(k, [Fraction(1), *ms]), k=k, ms=ms)
                rep.check("p zero padding", pm, p_multi(k, [*ms, Fraction(0)]), k=k, ms=ms)
                rep.check("q zero padding", q_multi(k, ms), q_multi(k, [*ms, Fraction(0)]), k=k, ms=ms)
                if n < n_max:
                    rep.check(
                        "p dilaton",
                        p_multi(k, [*ms, Fraction(1)]) - p_multi(k, [*ms, Fraction(0)]),
                        p_multi(k - 1, ms),
                        k=k, ms=ms,
                    )
        for ms in itertools.combinations_with_replacement(int_vals, n):
            for k in range(k_max):
                rep.check("p string", (k + 1) * p_multi(k + 1, list(ms)), p_string_rhs(k, list(ms)), k=k, ms=ms)
        if n <= 4:
            for ms in itertools.product(vals, repeat=n):
                for k in range(k_max + 1):
                    srt = sorted(ms)
                    rep.check("p symmetric", p_multi(k, srt), p_multi(k, list(ms)), k=k, ms=ms)
                    rep.check("q symmetric", q_multi(k, srt), q_multi(k, list(ms)), k=k, ms=ms)
    for m1, m2 in itertools.combinations_with_replacement(odd_vals, 2):
        for n_rest in range(n_max - 1):
            for rest in itertools.combinations_with_replacement(int_vals, n_rest):
                rest = list(rest)
                for k in range(k_max + 1):
                    pt = ptilde_multi(k, m1, m2, rest)
                    rep.check("ptilde symmetric", pt, ptilde_multi(k, m2, m1, rest), k=k, m1=m1, m2=m2, rest=rest)
                    if n_rest + 2 < n_max:
                        rep.check(
                            "ptilde dilaton",
                            ptilde_multi(k, m1, m2, [*rest, Fraction(1)]) - ptilde_multi(k, m1, m2, [*rest, Fraction(0)]),
                            ptilde_multi(k - 1, m1, m2, rest),
                            k=k, m1=m1, m2=m2, rest=rest,
                        )
                    if k < k_max:
                        rep.check(
                            "ptilde string",
                            (k + 1) * ptilde_multi(k + 1, m1, m2, rest),
                            ptilde_string_rhs(k, m1, m2, rest),
                            k=k, m1=m1, m2=m2, rest=rest,
                        )
                    if m2 == HALF and not rest:
                        rep.check("ptilde(m,1/2)", ptilde_k(k, m1), pt, k=k, m=m1)
    for n_rest in range(1, n_max - 1):
        for rest in itertools.combinations_with_replacement(vals, n_rest):
            for k in range(k_max + 1):
                rep.check(
                    "ptilde(1/2,1/2;ms) = q",
                    q_multi(k, list(rest)),
                    ptilde_multi(k, HALF, HALF, list(rest)),
                    k=k, ms=rest,
                )
    return rep.finish()
