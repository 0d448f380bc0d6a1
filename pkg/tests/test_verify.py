from __future__ import annotations

import pytest

from carlitz_bernoulli.fq import field_create
from carlitz_bernoulli.verify import SUITE_NAMES, CheckResult, Limits, compositions, default_prime_degree, run_suite


def test_compositions():
    grid = compositions(3, 5)
    assert grid[:4] == [(1,), (1, 1), (2,), (1, 1, 1)]
    assert len(grid) == len(set(grid))
    assert all(s.depth <= 3 and s.weight <= 5 for s in grid)
    # compositions of w into at most 3 parts: 1 + 2 + 4 + 7 + 11
    assert len(grid) == 25


def test_default_prime_degrees():
    assert [default_prime_degree(q) for q in (2, 3, 4, 5, 7)] == [4, 3, 2, 2, 1]


def test_check_result_keeps_first_counterexample():
    res = CheckResult("demo", "check")
    res.expect(True)
    res.expect(False, n=3, s=(1, 2))
    res.expect(False, n=4)
    assert res.record() == {"suite": "demo", "check": "check", "status": "fail", "cases": 3,
                            "skipped": 0, "failures": 2, "counterexample": {"n": 3, "s": "1,2"}}


@pytest.mark.parametrize("p, e", [(3, 1), (2, 2)])
def test_every_suite_passes_on_small_grid(p, e):
    F = field_create(p, e)
    limits = Limits(max_n=F.q ** 2, max_prime_deg=2)
    results = list(run_suite("all", F, limits))
    assert {r.suite for r in results} == set(SUITE_NAMES)
    assert [r.record() for r in results if not r.passed] == []


def test_unknown_suite():
    with pytest.raises(ValueError):
        list(run_suite("nope", field_create(2), Limits(4, 2)))
