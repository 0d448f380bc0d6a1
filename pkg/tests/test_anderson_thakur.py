from __future__ import annotations

import pytest

from carlitz_bernoulli.anderson_thakur import (
    a_j_at_theta,
    at_polynomials,
    coefficient_bound_ok,
    generating_identity_residual,
    index_data,
    j_tuples,
)
from carlitz_bernoulli.bivariate import BiPoly, BiRat
from carlitz_bernoulli.carlitz import carlitz_cache
from carlitz_bernoulli.fq import field_create
from carlitz_bernoulli.poly import Poly
from carlitz_bernoulli.textform import parse_bipoly, parse_poly

FIELDS = [field_create(2), field_create(3), field_create(2, 2), field_create(5)]


def test_first_polynomials_are_one():
    for F in FIELDS:
        series = at_polynomials(F, F.q - 1)
        assert all(series[n] == BiPoly.one(F) for n in range(F.q))


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_H_q_closed_form(F):
    q = F.q
    expected = parse_bipoly(F, f"(t^{q}-t)+(t^{q}-T^{q})")
    assert at_polynomials(F, q)[q] == expected


def test_small_examples():
    F2, F3 = field_create(2), field_create(3)
    assert at_polynomials(F2, 2)[2] == parse_bipoly(F2, "t+T^2")
    assert at_polynomials(F3, 3)[3] == parse_bipoly(F3, "2*t^3-t-T^3")


def _inverse_by_series(F, order):
    # oracle: invert 1 - sum_i c_i x^{q^i} coefficient by coefficient over BiRat
    q = F.q
    cache = carlitz_cache(F)
    c = {}
    i = 0
    while q ** i <= order:
        num = BiPoly.one(F)
        for j in range(1, i + 1):
            num = num * (BiPoly.monomial(F, 0, q ** i) - BiPoly.monomial(F, q ** j, 0))
        c[q ** i] = BiRat(num, BiPoly.from_t(cache.D(i)))
        i += 1
    g = [BiRat(BiPoly.one(F))]
    for n in range(1, order + 1):
        total = BiRat(BiPoly.zero(F))
        for k, ck in c.items():
            if k <= n:
                total = total + ck * g[n - k]
        g.append(total)
    return g


@pytest.mark.parametrize("F", FIELDS[:3], ids=str)
def test_polynomials_match_series_inversion(F):
    order = F.q ** 2
    cache = carlitz_cache(F)
    g = _inverse_by_series(F, order)
    series = at_polynomials(F, order)
    for n in range(order + 1):
        assert g[n] == BiRat(series[n], BiPoly.from_t(cache.factorial(n)))


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_round_trip(F):
    series = at_polynomials(F, F.q ** 2)
    assert generating_identity_residual(series) == []


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_t_degree_bounded_by_factorial_degree(F):
    # each c_i has equal t-degree in numerator and denominator, so deg_t H_n <= deg Pi(n)
    cache = carlitz_cache(F)
    series = at_polynomials(F, F.q ** 2 + F.q)
    for n in range(series.order + 1):
        assert series[n].t_degree <= cache.factorial(n).degree


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_t_degree_can_exceed_n(F):
    # deg_t H_n <= n holds below q^2 but not at n = q^2 (t-degrees 7, 18, 23, 50 for q = 2, 3, 4, 5)
    series = at_polynomials(F, F.q ** 2)
    over = [n for n in range(series.order + 1) if series[n].t_degree > n]
    assert over == [F.q ** 2]


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_coefficient_bound(F):
    for s in range(1, 2 * F.q + 1):
        data = index_data(F, (s,))
        assert data.u[0][-1]
        assert all(coefficient_bound_ok(F, u, s) for u in data.u[0])


def test_bound_comparison_is_exact():
    F = field_create(3)
    # s q / (q - 1) = 6 for s = 4, q = 3: degree 5 passes, degree 6 fails
    assert coefficient_bound_ok(F, Poly.monomial(F, 5), 4)
    assert not coefficient_bound_ok(F, Poly.monomial(F, 6), 4)
    assert coefficient_bound_ok(F, Poly.zero(F), 1)


def test_index_data_examples():
    F = field_create(3)
    data = index_data(F, (1, 1, 1))
    assert data.m == (0, 0, 0) and all(u == (Poly.one(F),) for u in data.u)
    assert list(j_tuples(data)) == [(0, 0, 0)]
    assert index_data(F, (3,)).m == (0,)
    d4 = index_data(F, (4,))
    assert d4.m == (3,)
    assert d4.u[0] == tuple(parse_poly(F, t) for t in ("-T^3", "-1", "0", "2"))
    assert d4.weights((1,)) == (parse_poly(F, "2"),)
    with pytest.raises(ValueError):
        d4.weights((4,))


def test_j_tuples_enumeration():
    F = field_create(2)
    data = index_data(F, (3, 1))
    assert data.m == (1, 0)
    assert list(j_tuples(data)) == [(0, 0), (1, 0)]
    data = index_data(F, (3, 3, 2))
    assert len(list(j_tuples(data))) == (data.m[0] + 1) * (data.m[1] + 1) * (data.m[2] + 1)


def test_a_j():
    F = field_create(3)
    assert a_j_at_theta(F, (0, 0)).is_one()
    assert a_j_at_theta(F, (1, 2)) == Poly.monomial(F, 3)
    assert a_j_at_theta(F, (3,)) == Poly.monomial(F, 3)
