"""Acceptance criteria, one test each, on the exact grids they specify.

Each test prints a single ``[criterion N] PASS|FAIL`` line (visible with
``pytest -v``) before asserting, so a failing run still lists every verdict.
"""

from __future__ import annotations

import subprocess
import sys
import time

import pytest

from carlitz_bernoulli.anderson_thakur import (
    ATDenominatorError,
    at_polynomials,
    coefficient_bound_ok,
    generating_identity_residual,
    index_data,
    j_tuples,
)
from carlitz_bernoulli.bernoulli import (
    bc,
    bc_series_oracle,
    mpbcn_closed,
    mpbcn_recursion_check,
    mpbcn_series_oracle,
    mpbcn_special_ones,
)
from carlitz_bernoulli.bivariate import BiPoly
from carlitz_bernoulli.finite_zeta import (
    HypothesisViolation,
    PrimeModulus,
    enumerate_primes,
    fmzv_direct,
    fmzv_via_cmpl,
    fmzv_via_mpbcn,
    fmzv_via_mpbcn_ones,
)
from carlitz_bernoulli.fq import field_create
from carlitz_bernoulli.poly import RatFunc
from carlitz_bernoulli.stirling import digit_sum, stirling_carlitz
from carlitz_bernoulli.verify import compositions

F2, F3, F4, F5 = field_create(2), field_create(3), field_create(2, 2), field_create(5)

INDEX_GRID = compositions(3, 5)


def report(capsys, number: int, title: str, failures: list, detail: str, started: float, budget: float) -> None:
    elapsed = time.perf_counter() - started
    ok = not failures and elapsed < budget
    verdict = "PASS" if ok else "FAIL"
    note = f"first counterexample {failures[0]}" if failures else detail
    with capsys.disabled():
        print(f"\n[criterion {number}] {verdict} {title}: {note} ({elapsed:.1f}s, budget {budget:.0f}s)")
    assert not failures, failures[:5]
    assert elapsed < budget


def test_criterion_1_closed_form_matches_generating_series(capsys):
    started = time.perf_counter()
    failures, keys = [], 0
    for F in (F2, F3, F4):
        top = F.q ** 3
        for s in INDEX_GRID:
            for j in j_tuples(index_data(F, s)):
                oracle = mpbcn_series_oracle(F, s, j, top)
                for n in range(top + 1):
                    keys += 1
                    if mpbcn_closed(F, s, j, n) != oracle[n]:
                        failures.append((F.q, s, j, n))
    report(capsys, 1, "MPBCN closed form = generating series", failures, f"{keys} keys", started, 300)


def test_criterion_2_bc_stirling_sum_matches_series(capsys):
    started = time.perf_counter()
    failures, cases = [], 0
    for F in (F2, F3, F5):
        oracle = bc_series_oracle(F, F.q ** 3)
        for n in range(F.q ** 3 + 1):
            cases += 1
            if bc(F, n) != oracle[n]:
                failures.append((F.q, n))
    report(capsys, 2, "BC_n Stirling-Carlitz sum = z/e_C(z)", failures, f"{cases} values", started, 60)


def test_criterion_3_vanishing_off_multiples_of_q_minus_1(capsys):
    started = time.perf_counter()
    failures, cases = [], 0
    for F in (F2, F3, F4):
        q = F.q
        for n in range(q ** 3 + 1):
            if n % (q - 1):
                cases += 1
                if bc(F, n):
                    failures.append((q, "BC", n))
        for s in INDEX_GRID:
            for j in j_tuples(index_data(F, s)):
                for n in range(q ** 3 + 1):
                    if n % (q - 1):
                        cases += 1
                        if mpbcn_closed(F, s, j, n):
                            failures.append((q, s, j, n))
    report(capsys, 3, "BC_n and BC^{s,j}_n vanish when (q-1) does not divide n", failures,
           f"{cases} vanishing cases", started, 300)


def test_criterion_4_stirling_carlitz_laws(capsys):
    started = time.perf_counter()
    failures, cases = [], 0
    one = {F: RatFunc.one(F) for F in (F2, F3)}
    for F in (F2, F3):
        q, top = F.q, F.q ** 3
        for n in range(top + 1):
            for m in range(top + 1):
                value = stirling_carlitz(F, n, m)
                if n == m:
                    cases += 1
                    if value != one[F]:
                        failures.append((q, "diagonal", n))
                elif m == 0 or n < m:
                    cases += 1
                    if value:
                        failures.append((q, "zero", n, m))
                if digit_sum(n, q) > digit_sum(m, q):
                    cases += 1
                    if value:
                        failures.append((q, "digit-sum", n, m))
        for m in range(5):
            for i in range(m + 1):
                cases += 1
                value = stirling_carlitz(F, q ** m - 1, q ** i - 1)
                if value != (one[F] if m == i else RatFunc.zero(F)):
                    failures.append((q, "q-power", m, i))
    report(capsys, 4, "Stirling-Carlitz basic values, digit-sum vanishing, q-power 0/1", failures,
           f"{cases} cases", started, 60)


def test_criterion_5_all_ones_index_through_bc(capsys):
    started = time.perf_counter()
    failures, cases = [], 0
    for F in (F2, F3):
        q = F.q
        for r in range(1, 4):
            for n in range(q ** (r - 1) - 1, q ** 3 + 1):
                cases += 1
                if mpbcn_special_ones(F, r, n) != mpbcn_closed(F, (1,) * r, (0,) * r, n):
                    failures.append((q, r, n))
    report(capsys, 5, "BC^{(1..1),(0..0)}_n via BC numbers = closed form", failures, f"{cases} cases",
           started, 60)


def test_criterion_6_recursion_at_q_powers(capsys):
    started = time.perf_counter()
    failures, cases = [], 0
    for F in (F2, F3):
        for s in compositions(3, 4):
            if s.depth not in (2, 3):
                continue
            for j in j_tuples(index_data(F, s)):
                for m in range(s.depth - 1, 5):
                    cases += 1
                    if not mpbcn_recursion_check(F, s, j, m).holds:
                        failures.append((F.q, s, j, m))
    report(capsys, 6, "recursion for BC^{s,j}_{q^m-1}", failures, f"{cases} cases", started, 60)


def test_criterion_7_finite_zeta_routes(capsys):
    started = time.perf_counter()
    failures, cases, skipped = [], 0, 0
    for F, dmax in ((F2, 4), (F3, 3)):
        for d in range(1, dmax + 1):
            for f in enumerate_primes(F, d):
                prime = PrimeModulus(f)
                for s in INDEX_GRID:
                    try:
                        via_cmpl = fmzv_via_cmpl(s, prime)
                        via_mpbcn = fmzv_via_mpbcn(s, prime)
                        ones = {dd: fmzv_via_mpbcn_ones(dd, s, prime) for dd in (1, 2)}
                    except HypothesisViolation:
                        skipped += 1
                        continue
                    cases += 1
                    direct = fmzv_direct(s, prime)
                    if not direct == via_cmpl == via_mpbcn:
                        failures.append((F.q, str(f), s, "three routes"))
                    for dd, value in ones.items():
                        cases += 1
                        if value != fmzv_direct((1,) * dd + tuple(s), prime):
                            failures.append((F.q, str(f), s, f"{dd} leading ones"))
    report(capsys, 7, "finite MZV: direct = polylog = MPBCN routes, leading ones dd<=2", failures,
           f"{cases} agreements, {skipped} (s, prime) pairs skipped by the Gamma hypothesis", started, 600)


def test_criterion_8_anderson_thakur(capsys):
    started = time.perf_counter()
    failures, cases = [], 0
    for F in (F2, F3, F5):
        q = F.q
        try:
            series = at_polynomials(F, max(q ** 2, 2 * q - 1))
        except ATDenominatorError as exc:
            failures.append((q, "denominator", str(exc)))
            continue
        for n in range(q):
            cases += 1
            if series[n] != BiPoly.one(F):
                failures.append((q, "H_n = 1", n))
        residual = generating_identity_residual(at_polynomials(F, q ** 2))
        cases += q ** 2 + 1
        failures.extend((q, "round trip", n) for n in residual)
        for s in range(1, 2 * q + 1):
            u = index_data(F, (s,)).u[0]
            cases += 1
            if not u[-1] or not all(coefficient_bound_ok(F, c, s) for c in u):
                failures.append((q, "bound", s))
    report(capsys, 8, "Anderson-Thakur polynomials: integrality, H_n = 1, round trip, degree bound",
           failures, f"{cases} checks", started, 60)


def test_criterion_9_verify_output_is_deterministic(capsys):
    started = time.perf_counter()
    cmd = [sys.executable, "-m", "carlitz_bernoulli", "verify", "--suite", "all"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    failures = []
    if runs[0].stdout != runs[1].stdout:
        failures.append("outputs differ")
    if any(r.returncode != 0 for r in runs):
        failures.append(f"exit codes {[r.returncode for r in runs]}")
    if not runs[0].stdout:
        failures.append("empty output")
    lines = runs[0].stdout.count(b"\n")
    report(capsys, 9, "two `verify --suite all` runs are byte-identical", failures,
           f"{lines} records each", started, 600)
