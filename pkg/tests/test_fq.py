from __future__ import annotations

import itertools

import pytest

from carlitz_bernoulli.fq import (
    FieldMismatchError,
    field_create,
    fq_generator,
    fq_inv,
    is_irreducible_fp,
)

from conftest import SMALL_FIELDS


def _has_root(coeffs, p):
    return any(sum(c * x ** k for k, c in enumerate(coeffs)) % p == 0 for x in range(p))


def test_prime_field_has_trivial_modulus():
    F = field_create(3, 1)
    assert (F.p, F.e, F.q) == (3, 1, 3)
    assert [str(a) for a in F.elements()] == ["0", "1", "2"]


def test_f4_default_modulus_is_x2_x_1():
    F = field_create(2, 2)
    assert F.modulus == (1, 1, 1)


def test_f9_accepts_given_modulus():
    # x^2 + 2x + 2 has no root in F_3, so a quadratic is irreducible
    assert not _has_root([2, 2, 1], 3)
    F = field_create(3, 2, [2, 2, 1])
    assert F.modulus == (2, 2, 1) and F.q == 9


def test_default_modulus_is_lexicographically_smallest():
    # oracle: scan monic polynomials, top coefficient first, checking irreducibility by root search
    for p in (2, 3, 5):
        for e in (2, 3):
            if p ** e > 64:
                continue
            F = field_create(p, e)
            for high_first in itertools.product(range(p), repeat=e):
                coeffs = list(reversed(high_first)) + [1]
                if not _has_root(coeffs, p):
                    break
            assert F.modulus == tuple(coeffs)


@pytest.mark.parametrize("p, e, modulus", [(4, 1, None), (2, 2, [0, 0, 1]), (3, 2, [1, 0, 0, 1]), (2, 0, None)])
def test_field_create_rejects_bad_input(p, e, modulus):
    with pytest.raises(ValueError):
        field_create(p, e, modulus)


def test_field_size_limit():
    with pytest.raises(ValueError):
        field_create(2, 7)
    assert field_create(2, 7, max_q=128).q == 128


def test_inverse_examples(F3, F4):
    assert fq_inv(F3(1)) == F3(1)
    assert fq_inv(F3(2)) == F3(2)
    u = F4([0, 1])
    assert str(u) == "u"
    assert fq_inv(u) == u + 1
    assert str(fq_inv(u)) == "u+1"
    with pytest.raises(ZeroDivisionError):
        fq_inv(F3(0))


@pytest.mark.parametrize("p, expected", [(2, 1), (3, 2), (5, 2), (7, 3)])
def test_generator_of_prime_fields(p, expected):
    assert fq_generator(field_create(p)) == field_create(p)(expected)


@pytest.mark.parametrize("p, e", SMALL_FIELDS)
def test_generator_powers_hit_one_exactly_at_multiples(p, e):
    F = field_create(p, e)
    g = fq_generator(F)
    for n in range(2 * (F.q - 1) + 1):
        assert (g ** n == F.one) == (n % (F.q - 1) == 0)
    smaller = [a for a in F.elements() if a.code and a.code < g.code]
    assert all(F.order(a.code) < F.q - 1 for a in smaller)


@pytest.mark.parametrize("p, e", [pe for pe in SMALL_FIELDS if pe[0] ** pe[1] <= 25])
def test_field_laws_exhaustive(p, e):
    F = field_create(p, e)
    els = F.elements()
    for a in els:
        if a:
            assert fq_inv(fq_inv(a)) == a
            assert a ** (F.q - 1) == F.one
            assert a * fq_inv(a) == F.one
        assert a ** F.q == a
        for b in els:
            assert (a + b) ** p == a ** p + b ** p
            assert a * b == b * a
            assert (a - b) + b == a


def test_mixing_fields_is_an_error(F3, F5):
    with pytest.raises(FieldMismatchError):
        F3(1) + F5(1)


def test_brute_force_irreducibility_over_fp():
    # degree <= 3: irreducible iff no root
    for p in (2, 3):
        for d in (2, 3):
            for low in itertools.product(range(p), repeat=d):
                coeffs = list(low) + [1]
                assert is_irreducible_fp(coeffs, p) == (not _has_root(coeffs, p))
