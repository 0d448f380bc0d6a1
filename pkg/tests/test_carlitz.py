from __future__ import annotations

import itertools
from functools import reduce

import pytest

from carlitz_bernoulli.carlitz import (
    Index,
    carlitz_cache,
    carlitz_exp,
    carlitz_factorial,
    carlitz_gamma,
    carlitz_log,
    chain_tails,
    cmpl_series,
    compute_D,
    compute_L,
    log_floor,
    q_digits,
)
from carlitz_bernoulli.fq import field_create
from carlitz_bernoulli.poly import Poly, RatFunc, poly_gcd
from carlitz_bernoulli.series import TruncSeries
from carlitz_bernoulli.textform import parse_poly

FIELDS = [field_create(2), field_create(3), field_create(2, 2), field_create(5)]


def monic_of_degree(F, d):
    for low in itertools.product(range(F.q), repeat=d):
        yield Poly.from_codes(F, list(low) + [1])


def lcm(a, b):
    return (a * b) // poly_gcd(a, b)


def test_index_validation():
    assert Index([2, 1]).depth == 2 and Index([2, 1]).weight == 3
    for bad in ([], [0], [2, -1]):
        with pytest.raises(ValueError):
            Index(bad)


def test_digits_and_log():
    assert q_digits(14, 3) == [2, 1, 1]
    assert q_digits(0, 5) == []
    assert [log_floor(n, 2) for n in (1, 2, 3, 4, 7, 8)] == [0, 1, 1, 2, 2, 3]


def test_small_values():
    F2, F3 = field_create(2), field_create(3)
    assert compute_D(F3, 0).is_one() and compute_L(F3, 0).is_one()
    assert compute_D(F3, 1) == parse_poly(F3, "T^3-T")
    assert compute_L(F3, 1) == parse_poly(F3, "T-T^3")
    assert compute_D(F2, 2) == parse_poly(F2, "T^8+T^6+T^5+T^3")
    assert compute_L(F3, 2) == parse_poly(F3, "(T-T^3)*(T-T^9)")


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_D_is_product_of_monic_polynomials(F):
    # classical oracle: D_i is the product of all monic polynomials of degree i
    for i in range(3 if F.q <= 3 else 2):
        assert compute_D(F, i) == reduce(lambda a, b: a * b, monic_of_degree(F, i), Poly.one(F))


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_L_is_signed_lcm_of_monic_polynomials(F):
    # classical oracle: (-1)^i L_i is the lcm of all monic polynomials of degree i
    for i in range(3 if F.q <= 3 else 2):
        expected = reduce(lcm, monic_of_degree(F, i), Poly.one(F))
        assert compute_L(F, i) * (-1) ** i == expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_degrees(p):
    F = field_create(p)
    q = F.q
    for i in range(6 if q < 5 else 5):
        assert compute_D(F, i).degree == i * q ** i
        assert compute_D(F, i).is_monic()
        assert compute_L(F, i).degree == sum(q ** j for j in range(1, i + 1))
        assert compute_L(F, i).leading == F(-1) ** i


@pytest.mark.parametrize("F", FIELDS[:3], ids=str)
def test_D_power_recursion(F):
    q = F.q
    theta = Poly.theta(F)
    for m in range(5):
        D = compute_D(F, m)
        rhs = RatFunc(-compute_D(F, m + 1), D * (theta - Poly.monomial(F, q ** (m + 1))))
        assert RatFunc(D ** (q - 1)) == rhs


@pytest.mark.parametrize("F", FIELDS[:3], ids=str)
def test_factorial_at_q_powers(F):
    q = F.q
    for j in range(5):
        n = q ** j - 1
        prod = reduce(lambda a, b: a * b, (compute_D(F, m) ** (q - 1) for m in range(j)), Poly.one(F))
        assert carlitz_factorial(F, n) == prod
        assert RatFunc(carlitz_factorial(F, n)) == RatFunc(compute_D(F, j) * (-1) ** j, compute_L(F, j))


def test_factorial_examples():
    F = field_create(3)
    assert all(carlitz_factorial(F, n).is_one() for n in range(3))
    assert carlitz_factorial(F, 3) == compute_D(F, 1)
    assert carlitz_factorial(F, 14) == compute_D(F, 0) ** 2 * compute_D(F, 1) * compute_D(F, 2)
    assert carlitz_gamma(F, 4) == carlitz_factorial(F, 3)
    with pytest.raises(ValueError):
        carlitz_gamma(F, 0)


def test_cache_limit():
    F = field_create(2)
    with pytest.raises(ValueError):
        carlitz_cache(F).D(13)


def test_exp_and_log_coefficients():
    F = field_create(3)
    e, log = carlitz_exp(F, 9), carlitz_log(F, 9)
    assert e[1] == RatFunc.one(F) and log[1] == RatFunc.one(F)
    assert e[3] == RatFunc(Poly.one(F), compute_D(F, 1))
    assert log[3] == RatFunc(Poly.one(F), parse_poly(F, "T-T^3"))
    assert not e[2] and e.support() == [1, 3, 9]


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_exp_is_Fq_linear(F):
    order = F.q ** 2
    e = carlitz_exp(F, order)
    for g in F.elements():
        # e_C(g z): coefficient of z^n scaled by g^n
        scaled = TruncSeries(F, [c * Poly(F, [g ** n]) for n, c in enumerate(e.coeffs)])
        assert scaled == e.scale(Poly(F, [g]))


@pytest.mark.parametrize("F", FIELDS[:2], ids=str)
def test_log_inverts_exp(F):
    order = F.q ** 2 + 1
    e = carlitz_exp(F, order)
    composed = TruncSeries.zero(F, order)
    # log_C(e_C(z)) = sum_i e_C(z)^{q^i} / L_i, powers by plain multiplication
    for i in range(log_floor(order, F.q) + 1):
        composed = composed + (e ** (F.q ** i)).scale(RatFunc(Poly.one(F), compute_L(F, i)))
    assert composed == TruncSeries.monomial(F, 1, order)


def test_chain_tails_matches_enumeration():
    fs = [lambda i: i + 2, lambda i: 3 * i + 1]
    bound = 6
    tails = chain_tails(fs, bound, 0, 1)
    for top in range(bound + 1):
        brute = sum(fs[0](a) * fs[1](b) for a in range(top) for b in range(a))
        assert tails[top] == brute
    assert chain_tails([], 3, 0, 1) == [1, 1, 1, 1]


def test_polylog_examples():
    F = field_create(2)
    one = Poly.one(F)
    assert cmpl_series(F, (1,), (one,), 8) == TruncSeries.monomial(F, 1, 8)
    assert cmpl_series(F, (1, 1), (one, one), 1) == TruncSeries.zero(F, 1)
    li = cmpl_series(F, (1, 1), (one, one), 4)
    assert li[2] == RatFunc(one, compute_L(F, 1) * compute_L(F, 0))


def test_polylog_against_direct_double_sum():
    F = field_create(3)
    order = 30
    w1, w2 = parse_poly(F, "T+1"), parse_poly(F, "2*T^2")
    e = carlitz_exp(F, order)
    expected = TruncSeries.zero(F, order)
    for i1 in range(4):
        for i2 in range(i1):
            c = RatFunc(w1 ** (3 ** i1) * w2 ** (3 ** i2), compute_L(F, i1) ** 2 * compute_L(F, i2))
            expected = expected + (e ** (3 ** i1)).scale(c)
    assert cmpl_series(F, (2, 1), (w1, w2), order) == expected
