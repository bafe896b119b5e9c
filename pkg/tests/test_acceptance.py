"""One test per acceptance criterion; each prints a PASS/FAIL line."""
from __future__ import annotations

import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from tightmaps import verify
from tightmaps.counts import four_odd_slicings, slicings, volume_poly
from tightmaps.mapgen import oracle_count, oracle_sweep_both
from tightmaps.counts import count_tight
from tightmaps.polys import verify_poly_identities
from tightmaps.report import Report

H = Fraction(1, 2)


def record(number: int, title: str, ok: bool, elapsed: float, budget: float, detail: str = "") -> None:
    status = "PASS" if ok and elapsed < budget else "FAIL"
    line = f"{status} criterion {number}: {title} ({elapsed:.1f}s, budget {budget:.0f}s){' ' + detail if detail else ''}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, detail
    assert elapsed < budget, f"took {elapsed:.1f}s"


def summary(reports) -> str:
    cases = sum(r.cases for r in reports)
    fails = [f for r in reports for f in r.failures[:3]]
    return f"{cases} cases, {sum(len(r.failures) for r in reports)} failures {fails if fails else ''}".strip()


@pytest.fixture(scope="module")
def sweep():
    t = time.perf_counter()
    rows = list(oracle_sweep_both(12, max_zeros=2, cap=12))
    return rows, time.perf_counter() - t


def test_criterion_1_slicings_example():
    t = time.perf_counter()
    value = slicings([3, 1, 1, 1])
    closed = four_odd_slicings(Fraction(3, 2), H, H, H)
    rooted = 3 * closed
    brute = oracle_count([3, 1, 1, 1], tight=False)
    ok = value == 2 and closed == 2 and rooted == 6 and brute == 2
    record(1, "slicings(3,1,1,1) = 2, rooted 6 = 3 x 2", ok, time.perf_counter() - t, 1, f"got {value}, {closed}, {rooted}, {brute}")


def test_criterion_2_oracle_tight(sweep):
    rows, enum_time = sweep
    t = time.perf_counter()
    rep = Report("oracle-tight")
    for ds, tight, _ in rows:
        rep.check("tight", tight, count_tight(list(ds)), ds=ds)
    record(2, "tight counts equal brute force, sum d <= 12, up to two zeros", rep.ok, enum_time + time.perf_counter() - t, 300, summary([rep]))


def test_criterion_3_oracle_non_tight(sweep):
    rows, enum_time = sweep
    t = time.perf_counter()
    rep = Report("oracle-all")
    for ds, _, plain in rows:
        rep.check("slicings", plain, slicings(list(ds)), ds=ds)
    four_odd = sum(1 for ds, _, _ in rows if sum(d % 2 for d in ds) >= 4)
    ok = rep.ok and four_odd > 0
    record(3, f"all-map counts equal brute force ({four_odd} rows with 4+ odd faces)", ok, enum_time + time.perf_counter() - t, 300, summary([rep]))


def test_criterion_4_identity_suites():
    t = time.perf_counter()
    reports = [verify_poly_identities(k_max=4, m_max=4, n_max=6, multi_d_max=5), verify.verify_counts(n_max=6, d_max=5)]
    record(4, "polynomial, convolution and transmutation identities", all(r.ok for r in reports), time.perf_counter() - t, 120, summary(reports))


def test_criterion_5_substitution():
    t = time.perf_counter()
    rep = verify.verify_substitution(12, 2)
    record(5, "A.B = I and substitution round trips", rep.ok, time.perf_counter() - t, 60, summary([rep]))


def test_criterion_6_codes():
    t = time.perf_counter()
    rep = verify.verify_codes(d_max=12, k_max=4, rs_max=4, tree_m_max=4)
    record(6, "word counts and tree/word round trips", rep.ok, time.perf_counter() - t, 60, summary([rep]))


def test_criterion_7_forests():
    t = time.perf_counter()
    rep = verify.verify_forests(6)
    record(7, "forest closed forms equal enumeration, n <= 6", rep.ok, time.perf_counter() - t, 120, summary([rep]))


def test_criterion_8_slices():
    t = time.perf_counter()
    rep = verify.verify_slices(8, 6)
    record(8, "decorated tree identities and enumeration", rep.ok, time.perf_counter() - t, 120, summary([rep]))


def test_criterion_9_quasi_polynomial():
    t = time.perf_counter()
    rep = Report("quasi")
    verify.check_quasi_polynomial(rep, d_max=9)
    record(9, "n = 4 counts are affine in squared lengths per parity class", rep.ok, time.perf_counter() - t, 60, summary([rep]))


def test_criterion_10_volume():
    t = time.perf_counter()
    rep = Report("volume")
    for bs in [(1, 2, 3), (0, 0, 0), (H, 7, Fraction(5, 3))]:
        rep.check("V3", 2, volume_poly(list(bs)), bs=bs)
    for b in [0, 1, 2, H, Fraction(7, 3), 10]:
        rep.check("V4(b,0,0,0)", b * b / Fraction(2), volume_poly([b, 0, 0, 0]), b=b)
    # term by term: only the composition (1,0,0,0) survives, with weight 1!/2^1
    rep.check("V4 term", Fraction(1, 2), volume_poly([1, 0, 0, 0]), b=1)
    for ds in [(2, 2, 2, 2), (1, 3, 2, 2), (4, 2, 2, 2)]:
        rep.check("V = 2 x top term", volume_poly(list(ds)), 2 * verify.leading_coefficient(ds), ds=ds)
    record(10, "volume polynomial values", rep.ok, time.perf_counter() - t, 1, summary([rep]))
