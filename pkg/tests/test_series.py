from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from carlitz_bernoulli.carlitz import carlitz_cache, carlitz_exp
from carlitz_bernoulli.fq import field_create
from carlitz_bernoulli.poly import Poly, RatFunc
from carlitz_bernoulli.series import (
    TruncationError,
    TruncSeries,
    rat_sum,
    series_frob_pow,
    series_inv,
    series_mul,
)
from carlitz_bernoulli.textform import parse_ratfunc

F2 = field_create(2)
F3 = field_create(3)


def ratfuncs(F):
    poly = st.lists(st.integers(0, F.q - 1), max_size=3).map(lambda c: Poly.from_codes(F, c))
    den = poly.filter(lambda p: not p.is_zero())
    return st.builds(RatFunc, poly, den)


def series(F, order, unit=False):
    coeffs = st.lists(ratfuncs(F), min_size=order + 1, max_size=order + 1)
    if unit:
        coeffs = coeffs.filter(lambda c: bool(c[0]))
    return coeffs.map(lambda c: TruncSeries(F, c))


def test_geometric_series():
    s = TruncSeries(F3, [1, -1], order=3)
    assert series_inv(s) == TruncSeries(F3, [1, 1, 1, 1])
    one = TruncSeries.one(F3, 5)
    assert series_inv(one) == one


def test_inverse_needs_unit():
    with pytest.raises(ZeroDivisionError):
        series_inv(TruncSeries(F3, [0, 1, 1]))


def test_multiplication_examples():
    s = TruncSeries(F3, [1, 2, parse_ratfunc(F3, "(T)/(T+1)")])
    assert series_mul(s, TruncSeries.one(F3, 2)) == s
    z = TruncSeries.monomial(F3, 1, 4)
    assert z * z == TruncSeries.monomial(F3, 2, 4)


def test_order_propagates_to_minimum():
    a = TruncSeries.one(F3, 5)
    b = TruncSeries.one(F3, 2)
    assert (a * b).order == 2 and (a + b).order == 2


def test_reading_past_order_raises():
    s = TruncSeries.one(F3, 3)
    assert s[3] == RatFunc.zero(F3)
    with pytest.raises(TruncationError):
        s[4]


def test_unit_part_of_exponential_inverts_back():
    order = 9
    e = carlitz_exp(F2, order)
    unit = e.shift_down(1)
    assert series_mul(unit, series_inv(unit)) == TruncSeries.one(F2, order - 1)


def test_frobenius_power_freshman_dream():
    s = TruncSeries(F3, [0, 1, 1], order=6)
    assert series_frob_pow(s, 1) == TruncSeries.from_sparse(F3, {3: RatFunc.one(F3), 6: RatFunc.one(F3)}, 6)
    assert series_frob_pow(s, 0) == s


def test_frobenius_power_of_exponential():
    q, order = 3, 27
    cache = carlitz_cache(F3)
    expected = {q ** (j + 1): RatFunc(Poly.one(F3), cache.D(j) ** q) for j in range(3) if q ** (j + 1) <= order}
    assert series_frob_pow(carlitz_exp(F3, order), 1) == TruncSeries.from_sparse(F3, expected, order)


def test_rat_sum_matches_left_fold():
    terms = [parse_ratfunc(F3, t) for t in ["(1)/(T)", "(2)/(T)", "(T)/(T^2+1)", "(1)/(T+1)", "0"]]
    folded = RatFunc.zero(F3)
    for t in terms:
        folded = folded + t
    assert rat_sum(F3, terms) == folded


@settings(max_examples=60)
@given(st.data())
def test_inverse_is_an_involution(data):
    F = data.draw(st.sampled_from([F2, F3]))
    s = data.draw(series(F, 4, unit=True))
    inv = series_inv(s)
    assert series_inv(inv) == s
    assert s * inv == TruncSeries.one(F, 4)


@settings(max_examples=40)
@given(st.data())
def test_frobenius_power_equals_repeated_product(data):
    F = data.draw(st.sampled_from([F2, F3]))
    i = data.draw(st.integers(0, 2))
    order = 2 * F.q ** i + 1
    s = TruncSeries(F, data.draw(st.lists(ratfuncs(F), min_size=3, max_size=3)), order)
    product = TruncSeries.one(F, order)
    for _ in range(F.q ** i):
        product = product * s
    assert series_frob_pow(s, i) == product


@settings(max_examples=40)
@given(st.data())
def test_qth_power_is_additive(data):
    F = data.draw(st.sampled_from([F2, F3]))
    a = data.draw(series(F, 6))
    b = data.draw(series(F, 6))
    assert (a + b) ** F.q == a ** F.q + b ** F.q
