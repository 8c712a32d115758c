"""Acceptance criteria 1 to 8, one test (and one PASS/FAIL line) each."""

import time
from fractions import Fraction

import pytest

from anzahl.bounds import DEFAULT_QS, sweep
from anzahl.field import construct_field
from anzahl.forms import standard_form
from anzahl.hermitian import rho_h
from anzahl.identity import identity_sweep, structural_sweep
from anzahl.oracle import run_campaign
from anzahl.symplectic import rho_s

from .conftest import ACCEPTANCE

TIMINGS: dict[int, float] = {}


def record(number, ok, note):
    ACCEPTANCE[number] = (ok, note)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {note}")
    assert ok, note


def campaign(kind, q, dims):
    order = q * q if kind == "hermitian" else q
    reports = []
    for n in dims:
        reports += run_campaign(standard_form(kind, n, construct_field(order)))
    return reports


def summarize(reports):
    passed = sum(r.status == "pass" for r in reports)
    failed = [r for r in reports if r.status == "fail"]
    skipped = [r for r in reports if r.status == "skipped"]
    return passed, failed, skipped


def test_criterion_1_hermitian_q2():
    start = time.perf_counter()
    reports = campaign("hermitian", 2, (2, 3, 4))
    elapsed = TIMINGS[1] = time.perf_counter() - start
    passed, failed, skipped = summarize(reports)
    stats = {r.statistic for r in reports}
    ok = not failed and not skipped and stats == {"alpha", "beta", "gamma", "rho"} and elapsed < 300
    record(1, ok, f"hermitian q=2 n<=4: {passed} tuples equal, {len(failed)} differ, {len(skipped)} skipped, {elapsed:.1f}s")


def test_criterion_2_hermitian_q3():
    start = time.perf_counter()
    reports = campaign("hermitian", 3, (2, 3))
    elapsed = TIMINGS[2] = time.perf_counter() - start
    passed, failed, skipped = summarize(reports)
    ok = not failed and not skipped and elapsed < 300
    record(2, ok, f"hermitian q=3 n<=3: {passed} tuples equal, {len(failed)} differ, {len(skipped)} skipped, {elapsed:.1f}s")


def test_criterion_3_symplectic():
    start = time.perf_counter()
    q2 = campaign("symplectic", 2, (2, 4, 6))
    q3 = campaign("symplectic", 3, (2, 4, 6))
    elapsed = TIMINGS[3] = time.perf_counter() - start
    p2, f2, s2 = summarize(q2)
    p3, f3, s3 = summarize(q3)
    reasons_ok = all(r.skipped and "budget" in r.skipped for r in s3)
    ok = not f2 and not s2 and not f3 and reasons_ok and elapsed < 600
    record(3, ok, f"symplectic q=2: {p2} equal; q=3: {p3} equal, {len(s3)} skipped over budget; {len(f2) + len(f3)} differ, {elapsed:.1f}s")


def test_criterion_4_closed_form_anchors():
    checks = []
    for q in (3, 4, 5, 7, 9):
        Q = Fraction(q)
        checks.append(rho_h(1, 1, 2, q) == 1 - Q**-2 * Q / (Q - 1))
    checks.append(rho_h(1, 1, 2, 3) == 1 - Fraction(3, 2) / 9)
    checks.append(rho_s(1, 1, 2, 2) == Fraction(1, 2))
    record(4, all(checks), f"{sum(checks)}/{len(checks)} anchors exact")


def test_criterion_5_identity_suite():
    start = time.perf_counter()
    results = identity_sweep("hermitian", 6, 12) + identity_sweep("symplectic", 5, 10)
    elapsed = TIMINGS[5] = time.perf_counter() - start
    bad = [r for r in results if not r.holds]
    record(5, not bad and elapsed < 120, f"{len(results)} recursion and beta-difference checks, {len(bad)} failed, {elapsed:.1f}s")


def test_criterion_6_bound_suite():
    start = time.perf_counter()
    checks = sweep("all", qs=DEFAULT_QS, max_jk=5, max_gap=3, max_ab=10)
    elapsed = TIMINGS[6] = time.perf_counter() - start
    bad = [c for c in checks if not c.holds]
    families = {c.bound_id.split("-")[0] for c in checks}
    constants = {c.bound_id for c in checks if "/" in c.bound_id}
    expected = {f"hermitian-{c}" for c in ("9/5", "3/2", "43/25", "6/5", "21/16", "5/3", "13/8")} | {
        f"symplectic-{c}" for c in ("10/7", "7/4", "5/4", "5/3")
    }
    ok = not bad and expected <= constants and {"psi", "phi", "summand", "rho"} <= families and elapsed < 120
    record(6, ok, f"{len(checks)} exact comparisons over q in {list(DEFAULT_QS)}, {len(bad)} violated, {elapsed:.1f}s")


def test_criterion_7_structural_identities():
    results = structural_sweep(max_index=8, max_partition_dim=6)
    bad = [r for r in results if not r.holds]
    names = {r.name for r in results}
    needed = {
        "hermitian-double-count", "symplectic-double-count",
        "hermitian-gamma-factorization", "symplectic-gamma-factorization",
        "hermitian-rho-symmetry", "symplectic-rho-symmetry",
        "hermitian-beta-anchor", "symplectic-beta-anchor", "symplectic-partition",
    }
    record(7, not bad and needed <= names, f"{len(results)} structural identities, {len(bad)} failed, missing {sorted(needed - names)}")


def test_criterion_8_desk_scale():
    limits = {1: 300, 2: 300, 3: 600, 5: 120, 6: 120}
    missing = [n for n in limits if n not in TIMINGS]
    if missing:
        pytest.skip(f"criteria {missing} did not run in this session")
    failed_earlier = [n for n in range(1, 8) if n in ACCEPTANCE and not ACCEPTANCE[n][0]]
    over = [n for n, limit in limits.items() if TIMINGS[n] >= limit]
    total = sum(TIMINGS.values())
    record(8, not failed_earlier and not over, f"criteria 1-7 reproduced exactly in {total:.1f}s of enumeration and checking")
