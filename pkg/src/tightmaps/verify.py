"""Verification suites: exact identity checks returning a ``Report`` each."""
from __future__ import annotations

import itertools
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from . import codes
from . import indexsets as ix
from .counts import (
    count_tight,
    count_tight_two_marked,
    count_tight_vertex_side,
    decorated_tree_count,
    slice_identities_check,
    slicings,
    slicings_from_tight,
    subst_A,
    subst_B,
    tight_from_slicings,
    volume_poly,
)
from .forests import (
    A,
    consistent_arrays,
    count_twotype,
    count_twotype_constrained,
    tally_all_forests,
)
from .mapgen import oracle_sweep_both
from .numeric import binom, falling, multinomial
from .polys import HALF, p_k, p_ke, pi_rse, ptilde_k, q_k, verify_poly_identities
from .report import Report

SUITES = ("polys", "counts", "substitution", "codes", "forests", "slices", "quasi", "oracle")


def _halves(d_max: int, start: int = 0) -> list[Fraction]:
    return [Fraction(d, 2) for d in range(start, d_max + 1)]


def _same_parity_below(l: Fraction) -> list[Fraction]:
    out, m = [], l
    while m >= 0:
        out.append(m)
        m -= 1
    return out


# substitution and convolution --------------------------------------------------


def check_convolutions(rep: Report, l_max: int = 8, k_max: int = 4, rs_max: int = 4) -> None:
    """Tight-core substitution applied to p_k, q_k, ptilde_k and pi."""
    for d in range(1, 2 * l_max + 1):
        l = Fraction(d, 2)
        below = _same_parity_below(l)
        for k in range(k_max + 1):
            if l.denominator == 1:
                got = sum((subst_A(l, m) * p_k(k, m) for m in below), Fraction(0))
                rep.check("conv p", binom(l - 1, k) * binom(2 * l - 1, l), got, l=l, k=k)
                got = sum((subst_A(l, m) * q_k(k, m) for m in below), Fraction(0))
                rep.check("conv q", binom(l, k) * binom(2 * l - 1, l), got, l=l, k=k)
            else:
                got = sum((subst_A(l, m) * ptilde_k(k, m) for m in below), Fraction(0))
                rep.check("conv ptilde", binom(l - HALF, k) * binom(2 * l - 1, l - HALF), got, l=l, k=k)
        for r in range(rs_max + 1):
            for s in range(rs_max + 1):
                for eps in (0, 1):
                    low = l - Fraction(s + 1 + eps, 2)
                    if low.denominator != 1:
                        continue
                    got = sum((subst_A(l, m) * pi_rse(r, s, eps, m) for m in below), Fraction(0))
                    expected = multinomial(2 * l - 1, [low, l - r - Fraction(s + 1 - eps, 2), r, s])
                    rep.check("conv pi", expected, got, l=l, r=r, s=s, eps=eps)


def check_chu_vandermonde(rep: Report, n_max: int = 6) -> None:
    """The falling factorial expansion, plain and with two half-shifted
    arguments, on integer grids larger than the degree."""
    for n in range(3, n_max + 1):
        k = n - 3
        grid = range(-1, n - 2)
        comps = list(ix.weak_compositions(k, n))
        b = lru_cache(maxsize=None)(binom)
        for l1, l2 in itertools.product(grid, repeat=2):
            for rest in itertools.combinations_with_replacement(grid, n - 2):
                ls = [l1, l2, *rest]
                lhs = falling(sum(ls) - 1, k)
                plain = Fraction(0)
                shifted = Fraction(0)
                for c in comps:
                    tail = Fraction(1)
                    for li, ki in zip(rest, c[2:]):
                        tail *= b(li, ki)
                    if not tail:
                        continue
                    plain += b(l1 - 1, c[0]) * b(l2, c[1]) * tail
                    shifted += b(l1 - HALF, c[0]) * b(l2 - HALF, c[1]) * tail
                rep.check("chu-vandermonde", lhs, factorial(k) * plain, ls=ls)
                rep.check("chu-vandermonde shifted", lhs, factorial(k) * shifted, ls=ls)


def check_inverse(rep: Report, top: int = 12) -> None:
    """A and B are mutually inverse, on integers and on half-integers."""
    for offset in (Fraction(0), HALF):
        idx = [Fraction(j) + offset for j in range(top + 1) if j + offset <= top]
        for a in idx:
            for c in idx:
                ab = sum(subst_A(a, b) * subst_B(b, c) for b in idx)
                ba = sum(subst_B(a, b) * subst_A(b, c) for b in idx)
                rep.check("A.B = I", int(a == c), ab, l=a, m=c)
                rep.check("B.A = I", int(a == c), ba, l=a, m=c)


# transmutation relations --------------------------------------------------------


def _w_s(R: int, S: int, T: int) -> int:
    """r! (s-1)! T over tuples with s >= 1."""
    return factorial(R) * factorial(S - 1) * T if S >= 1 else 0


def _w_r(R: int, S: int, T: int) -> int:
    """(r-1)! s! T over tuples with r >= 1."""
    return factorial(R - 1) * factorial(S) * T if R >= 1 else 0


def _w_s_on_r(R: int, S: int, T: int) -> int:
    """r! (s-1)! T read over tuples with r >= 1 (needs s >= 1 too)."""
    return factorial(R) * factorial(S - 1) * T if R >= 1 and S >= 1 else 0


def _w_r_on_s(R: int, S: int, T: int) -> int:
    """(r-1)! s! T read over tuples with s >= 1 (needs r >= 1 too)."""
    return factorial(R - 1) * factorial(S) * T if R >= 1 and S >= 1 else 0


def _sum(ms, head, weight, stat) -> int:
    return ix.index_sum(ms, ix.fixed_domains(len(ms), head), weight, stat)


def _head_tail_lists(n_max: int, d_max: int, n_head: int) -> Iterator[list[Fraction]]:
    """Ordered head coordinates followed by a sorted tail."""
    vals = _halves(d_max)
    for n in range(max(3, n_head), n_max + 1):
        for head in itertools.product(vals, repeat=n_head):
            for tail in itertools.combinations_with_replacement(vals, n - n_head):
                yield [*head, *tail]


def check_transmutations(rep: Report, n_max: int = 6, d_max: int = 5) -> None:
    """The relations exchanging petal and marked-vertex statistics.

    Coordinates 1 and 2 carry pinned types, coordinate 3 is the special
    coordinate; a pinned eps_3 is used to turn the products eps_3 s_1 etc.
    into single-coordinate statistics.
    """
    s_at = lambda j: ix.at(j, lambda e, r, s: s)  # noqa: E731
    r_at = lambda j: ix.at(j, lambda e, r, s: r)  # noqa: E731
    bar_s = lambda j: ix.at(j, lambda e, r, s: (1 - e) * s)  # noqa: E731
    eps_r = lambda j: ix.at(j, lambda e, r, s: e * r)  # noqa: E731
    eps_s = lambda j: ix.at(j, lambda e, r, s: e * s)  # noqa: E731
    bar_r = lambda j: ix.at(j, lambda e, r, s: (1 - e) * r)  # noqa: E731

    # first relation: coordinates other than j are symmetric, take j = 1
    for ms in _head_tail_lists(n_max, d_max, 1):
        n = len(ms)
        dom = ix.fixed_domains(n)
        lhs = ix.index_sum(ms, dom, _w_s, bar_s(0))
        rhs = ix.index_sum(ms, dom, _w_r, eps_r(0))
        rep.check("transmutation j", lhs, rhs, ms=ms)

    for ms in _head_tail_lists(n_max, d_max, 3):
        # eps_3 = 1 pinned: eps_3 s_1 and eps_3 r_1 become s_1 and r_1
        a = _sum(ms, (-1, 1, 1), _w_s, s_at(0))
        b = _sum(ms, (0, 1, 1), _w_r, r_at(0))
        rep.check("transmutation pair 1", a, b, ms=ms)
        a = _sum(ms, (-1, 1, 1), _w_s, s_at(1))
        b = _sum(ms, (1, -1, 1), _w_s, s_at(1))
        c = _sum(ms, (1, 0, 1), _w_r, r_at(1))
        rep.check("transmutation pair 2 (sign swap)", a, b, ms=ms)
        rep.check("transmutation pair 2", b, c, ms=ms)
        # eps_3 = 0 pinned; the sums read r >= 1 on the (r-1)! s! side
        a = _sum(ms, (1, 0, 0), _w_r, r_at(0))
        b = _sum(ms, (0, 0, 0), _w_s, s_at(0))
        rep.check("transmutation pair 3", a, b, ms=ms)
        a = _sum(ms, (0, 1, 0), _w_r, r_at(1))
        b = _sum(ms, (0, 0, 0), _w_s, s_at(1))
        rep.check("transmutation pair 4", a, b, ms=ms)
        # last relation with j = 3
        a = _sum(ms, (-1, 1), _w_s, eps_s(2))
        b = _sum(ms, (1, 1), _w_r, bar_r(2))
        rep.check("transmutation special j", a, b, ms=ms)


def transmutation_literal_gap(n_max: int = 5, d_max: int = 5) -> Report:
    """The last two pair relations read with the subscripts as printed:
    the (r-1)! s! side restricted to s >= 1 and the r! (s-1)! side to r >= 1.
    Kept for the record; this reading does not hold in general."""
    rep = Report("transmutation-literal")
    for ms in _head_tail_lists(n_max, d_max, 3):
        a = _sum(ms, (1, 0, 0), _w_r_on_s, ix.at(0, lambda e, r, s: r))
        b = _sum(ms, (0, 0, 0), _w_s_on_r, ix.at(0, lambda e, r, s: s))
        rep.check("literal pair 3", a, b, ms=ms)
    return rep.finish()


# two-face necklaces and the three symmetric forms ----------------------------------


def pirs_vertex(r: int, s: int, m1: Fraction, m2: Fraction) -> int:
    """Necklace count organised by a distinguished marked vertex (r >= 1)."""
    total = Fraction(0)
    for r1 in range(r):
        for s1 in range(s + 1):
            r2, s2 = r - 1 - r1, s - s1
            total += pi_rse(r1, s1, -1, m1) * pi_rse(r2, s2, 1, m2)
            total += pi_rse(r1, s1, 0, m1) * pi_rse(r2, s2, 0, m2)
    return int(factorial(r - 1) * factorial(s) * total)


def pirs_petal(r: int, s: int, m1: Fraction, m2: Fraction) -> int:
    """Necklace count organised by a distinguished petal (s >= 1)."""
    total = Fraction(0)
    for r1 in range(r + 1):
        for s1 in range(s):
            r2, s2 = r - r1, s - 1 - s1
            total += pi_rse(r1, s1, 0, m1) * pi_rse(r2, s2, 1, m2)
            total += pi_rse(r1, s1, 1, m1) * pi_rse(r2, s2, 0, m2)
    return int(factorial(r) * factorial(s - 1) * total)


def check_necklaces(rep: Report, rs_max: int = 4, d_max: int = 5) -> None:
    for d1, d2 in itertools.product(range(1, d_max + 1), repeat=2):
        m1, m2 = Fraction(d1, 2), Fraction(d2, 2)
        for r in range(rs_max + 1):
            for s in range(rs_max + 1 - r):
                if r == 0 and s == 0:
                    continue
                direct = count_tight([d1, d2, *[0] * r, *[1] * s])
                if r >= 1:
                    rep.check("necklace by vertex", direct, pirs_vertex(r, s, m1, m2), r=r, s=s, m1=m1, m2=m2)
                if s >= 1:
                    rep.check("necklace by petal", direct, pirs_petal(r, s, m1, m2), r=r, s=s, m1=m1, m2=m2)


def check_three_forms(rep: Report, n_max: int = 6, d_max: int = 5) -> None:
    """Petal-side, vertex-side and two-face forms of the tight count agree,
    and the specialised formulas agree with the unified one."""
    for n in range(3, n_max + 1):
        for ds in itertools.combinations_with_replacement(range(d_max + 1), n):
            if not any(ds):
                continue
            unified = count_tight(list(ds))
            rep.check("vertex side form", unified, count_tight_vertex_side(list(ds)), ds=ds)
            rep.check("auto dispatch", unified, count_tight(list(ds), "auto"), ds=ds)
            positive = sorted({d for d in ds if d > 0})
            for a, b in itertools.product(positive, repeat=2):
                rest = list(ds)
                rest.remove(a)
                if b not in rest:
                    continue
                rest.remove(b)
                rep.check("two-face form", unified, count_tight_two_marked([a, b, *rest]), ds=[a, b, *rest])
            for perm in set(itertools.permutations(ds)) if n <= 4 else ():
                rep.check("symmetric", unified, count_tight(list(perm)), ds=perm)


def verify_counts(n_max: int = 6, d_max: int = 5) -> Report:
    rep = Report("counts")
    check_convolutions(rep)
    check_chu_vandermonde(rep, n_max)
    check_inverse(rep)
    check_transmutations(rep, n_max, d_max)
    check_necklaces(rep)
    check_three_forms(rep, n_max, d_max)
    return rep.finish()


# substitution round trips over length lists ----------------------------------------


def length_lists(max_total: int, max_zeros: int = 2, min_n: int = 3) -> Iterator[tuple[int, ...]]:
    """Sorted positive length lists with sum <= max_total, padded with up to
    max_zeros zeros, with at least min_n entries."""
    for total in range(1, max_total + 1):
        for part in _partitions(total):
            for z in range(max_zeros + 1):
                if len(part) + z >= min_n:
                    yield (*part, *[0] * z)


def _partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    max_part = total if max_part is None else max_part
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first, *rest)


def verify_substitution(max_total: int = 12, max_zeros: int = 2) -> Report:
    rep = Report("substitution")
    check_inverse(rep)
    for ds in length_lists(max_total, max_zeros):
        rep.check("tight from slicings", count_tight(ds), tight_from_slicings(ds), ds=ds)
        rep.check("slicings from tight", slicings(ds), slicings_from_tight(ds), ds=ds)
    return rep.finish()


# codes --------------------------------------------------------------------------------


def verify_codes(d_max: int = 12, k_max: int = 4, rs_max: int = 4, tree_m_max: int = 4, petal_edges: int = 3) -> Report:
    rep = Report("codes")
    F = codes.Form
    for d in range(1, d_max + 1):
        m = Fraction(d, 2)
        for k in range(k_max + 1):
            if m.denominator == 1:
                rep.check("UD form 1 count", p_k(k, m), sum(1 for _ in codes.enumerate_words(F.UDFORM1, m, k)), m=m, k=k)
                rep.check("UD form 2 count", q_k(k, m), sum(1 for _ in codes.enumerate_words(F.UDFORM2, m, k)), m=m, k=k)
            else:
                rep.check("UD form 3 count", ptilde_k(k, m), sum(1 for _ in codes.enumerate_words(F.UDFORM3, m, k)), m=m, k=k)
        for r in range(rs_max + 1):
            for s in range(rs_max + 1 - r):
                for eps in (-1, 0, 1):
                    got = sum(1 for _ in codes.enumerate_words(F.PETAL, m, r=r, s=s, eps=eps))
                    expected = binom(r + s, s) * p_ke(r + s, s + 1 + eps, m) if (d - s - 1 - eps) % 2 == 0 else 0
                    rep.check("petal word count", expected, got, m=m, r=r, s=s, eps=eps)
                    rep.check("petal word count = pi", pi_rse(r, s, eps, m), got, m=m, r=r, s=s, eps=eps)

    for d in range(1, 2 * tree_m_max + 1):
        m = Fraction(d, 2)
        forms = (F.UDFORM1, F.UDFORM2) if m.denominator == 1 else (F.UDFORM3,)
        for form in forms:
            for k in range(k_max + 1):
                words = list(codes.enumerate_words(form, m, k))
                trees = codes.all_marked_trees(form, m, k)
                rep.check("trees = words", len(words), len(trees), form=form.value, m=m, k=k)
                for w in words:
                    back = codes.tree_to_word(codes.word_to_tree(w, form), form)
                    rep.check("word -> tree -> word", codes.word_str(w), codes.word_str(back), form=form.value)
                images = set()
                for t in trees:
                    w = codes.tree_to_word(t, form)
                    images.add(w)
                    again = codes.word_to_tree(w, form)
                    rep.check("tree -> word -> tree", codes.iso_key(t), codes.iso_key(again), form=form.value, word=codes.word_str(w))
                rep.check("encoding injective", len(trees), len(images), form=form.value, m=m, k=k)

    for n_edges in range(petal_edges + 1):
        for t in codes.petal_trees(n_edges):
            w = codes.petal_tree_to_word(t)
            rep.check("petal tree round trip", t, codes.word_to_petal_tree(w), word=codes.word_str(w))
    return rep.finish()


# forests --------------------------------------------------------------------------------


def verify_forests(n_max: int = 6) -> Report:
    """Closed forms against a tally of every labeled two-type plane forest."""
    rep = Report("forests")
    for n in range(1, n_max + 1):
        everything, first = tally_all_forests(n)
        for w in consistent_arrays(n):
            rep.check("two-type count", everything.get(w.w, 0), count_twotype(w), w=w.w)
            if w.w[1][0] == A:
                rep.check("first-tree count", first.get(w.w, 0), count_twotype_constrained(w), w=w.w)
    return rep.finish()


# slices -----------------------------------------------------------------------------------


def verify_slices(identity_total: int = 8, family_total: int = 6) -> Report:
    """Decorated tree counts against tight counts (sum 2 m_i <= identity_total)
    and against explicit enumeration (sum 2 m_i <= family_total)."""
    ms_lists = []
    for total in range(1, identity_total + 1):
        for part in _partitions(total):
            for z in range(3):
                ms_lists.append([Fraction(d, 2) for d in (*part, *[0] * z)])
    rep = slice_identities_check(ms_lists)
    rep.suite = "slices"
    for ms in ms_lists:
        if sum(2 * m for m in ms) > family_total or len(ms) > 6:
            continue
        for eps in (0, 1):
            got = sum(1 for _ in codes.enumerate_decorated_families(eps, ms))
            rep.check("decorated family enumeration", decorated_tree_count(eps, ms), got, eps=eps, ms=ms)
    return rep.finish()


# oracle ---------------------------------------------------------------------------------


def verify_oracle(max_total: int = 12, max_zeros: int = 2, cap: int | None = None) -> Report:
    rep = Report("oracle")
    for ds, tight, plain in oracle_sweep_both(max_total, max_zeros, cap=cap):
        rep.check("tight count", tight, count_tight(list(ds)), ds=ds)
        rep.check("slicings", plain, slicings(list(ds)), ds=ds)
    return rep.finish()


# quasi-polynomial structure and volume ----------------------------------------------


def fit_affine_in_squares(ds_base: Sequence[int]) -> tuple[Fraction, list[Fraction]]:
    """Coefficients (c0, c) with count_tight(d) = c0 + sum c_i d_i^2, fitted
    from the base point and its single-coordinate shifts by 2."""
    base = list(ds_base)
    n0 = count_tight(base)
    coeffs = []
    for i in range(len(base)):
        moved = list(base)
        moved[i] += 2
        coeffs.append(Fraction(count_tight(moved) - n0, moved[i] ** 2 - base[i] ** 2))
    c0 = n0 - sum(c * d * d for c, d in zip(coeffs, base))
    return c0, coeffs


def check_quasi_polynomial(rep: Report, d_max: int = 9) -> None:
    """For four boundaries, per parity class: an affine function of the
    squared lengths fitted on grid points predicts every other point; classes
    with an odd number of odd lengths vanish."""
    n = 4
    for par in itertools.product((0, 1), repeat=n):
        grid = itertools.product(*(range(p, d_max + 1, 2) for p in par))
        if sum(par) % 2:
            for ds in grid:
                rep.check("odd class vanishes", 0, count_tight(list(ds)), ds=ds)
            continue
        c0, c = fit_affine_in_squares([p or 2 for p in par])
        for ds in grid:
            if any(ds):
                pred = c0 + sum(ci * d * d for ci, d in zip(c, ds))
                rep.check("quasi-polynomial prediction", pred, count_tight(list(ds)), ds=ds, parity=par)


def leading_coefficient(ds: Sequence[int]) -> Fraction:
    """Top coefficient in t^2 of count_tight(t * ds) over even t, by
    finite differences of order n - 3 in the variable t^2."""
    n = len(ds)
    k = n - 3
    xs = [Fraction((2 * j + 2) ** 2) for j in range(k + 1)]
    ys = [Fraction(count_tight([(2 * j + 2) * d for d in ds])) for j in range(k + 1)]
    # divided differences
    for level in range(1, k + 1):
        ys = [(ys[i + 1] - ys[i]) / (xs[i + level] - xs[i]) for i in range(len(ys) - 1)]
    return ys[0]


def verify_quasi(d_max: int = 9) -> Report:
    rep = Report("quasi")
    check_quasi_polynomial(rep, d_max)
    for bs in itertools.product(range(4), repeat=3):
        rep.check("volume n=3", 2, volume_poly(list(bs)), bs=bs)
    for b in range(8):
        rep.check("volume n=4 one length", Fraction(b * b, 2), volume_poly([b, 0, 0, 0]), b=b)
    for n in (3, 4, 5):
        for ds in itertools.combinations_with_replacement(range(1, 4), n):
            rep.check("volume = 2 x leading term", volume_poly(list(ds)), 2 * leading_coefficient(ds), ds=ds)
    return rep.finish()


def run_suite(name: str, bound: int | None = None) -> Report:
    """Run one suite. ``bound`` caps the suite's main size parameter:
    2m for polys, 2m_i for counts, the total degree for substitution and
    oracle, the word length for codes, the vertex count for forests,
    sum 2m_i for slices, and the largest length for quasi."""
    b = bound
    if name == "polys":
        return verify_poly_identities(m_max=4 if b is None else max(1, b // 2), multi_d_max=5 if b is None else min(5, b))
    if name == "counts":
        return verify_counts(d_max=5 if b is None else min(5, b))
    if name == "substitution":
        return verify_substitution(12 if b is None else b)
    if name == "codes":
        if b is None:
            return verify_codes()
        return verify_codes(d_max=b, tree_m_max=min(4, max(1, b // 2)))
    if name == "forests":
        return verify_forests(6 if b is None else min(6, b))
    if name == "slices":
        return verify_slices(8 if b is None else b, 6 if b is None else min(6, b))
    if name == "quasi":
        return verify_quasi(9 if b is None else max(3, b))
    if name == "oracle":
        return verify_oracle(12 if b is None else b)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")


def run_suites(names: Sequence[str], bound: int | None = None) -> list[Report]:
    if "all" in names:
        names = SUITES
    return [run_suite(n, bound) for n in names]
