"""Finite multiple zeta values in A / pA and the routes that compute them.

For a monic irreducible p of degree d,

    zeta(s)_p = sum_{d > deg a_1 > ... > deg a_r >= 0, a_i monic} 1 / (a_1^{s_1} ... a_r^{s_r})  mod p.

Three independent routes are provided: direct summation over monic
polynomials, finite Carlitz multiple polylogarithms weighted by
Anderson-Thakur coefficients, and multi-poly-Bernoulli-Carlitz numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .anderson_thakur import a_j_at_theta, index_data, j_tuples
from .bernoulli import bc, mpbcn_closed
from .carlitz import Index, carlitz_cache, carlitz_gamma, chain_tails
from .fq import FqField
from .poly import Poly, RatFunc, poly_gcd, poly_powmod, poly_xgcd


class NotInvertibleModPrime(ZeroDivisionError):
    """A denominator vanishes modulo the prime."""


class HypothesisViolation(ValueError):
    """The prime divides Gamma_{s_1} ... Gamma_{s_r}."""

    def __init__(self, s_i: int, gamma: Poly, prime: Poly):
        super().__init__(f"prime {prime} divides Gamma_{s_i} = {gamma}")
        self.s_i = s_i
        self.gamma = gamma
        self.prime = prime


def irreducible_test(f: Poly) -> bool:
    """Distinct-degree test: f has no factor of degree i <= deg f / 2."""
    if f.is_zero():
        raise ValueError("irreducibility of the zero polynomial")
    n = int(f.degree)
    if n == 0:
        return False
    theta = Poly.theta(f.field)
    h = theta % f
    for _ in range(1, n // 2 + 1):
        h = poly_powmod(h, f.field.q, f)
        if poly_gcd(h - theta, f).degree > 0:
            return False
    return True


def enumerate_monic(field: FqField, d: int) -> Iterator[Poly]:
    """All monic polynomials of degree d, lexicographic in (c_{d-1}, ..., c_0)."""
    for high_first in itertools.product(range(field.q), repeat=d):
        yield Poly.from_codes(field, list(reversed(high_first)) + [1])


def enumerate_primes(field: FqField, d: int) -> Iterator[Poly]:
    return (f for f in enumerate_monic(field, d) if irreducible_test(f))


@dataclass(frozen=True)
class PrimeModulus:
    poly: Poly

    def __post_init__(self):
        if not self.poly.is_monic():
            raise ValueError(f"{self.poly} is not monic")
        if not irreducible_test(self.poly):
            raise ValueError(f"{self.poly} is not irreducible")

    @property
    def field(self) -> FqField:
        return self.poly.field

    @property
    def degree(self) -> int:
        return int(self.poly.degree)

    def __call__(self, x) -> Residue:
        if isinstance(x, RatFunc):
            return reduce_mod(x, self)
        if isinstance(x, Poly):
            return Residue(self, x % self.poly)
        return Residue(self, Poly(self.field, [x]))

    def __str__(self) -> str:
        return str(self.poly)


class Residue:
    """An element of A / pA, represented by its remainder of degree < deg p."""

    __slots__ = ("modulus", "rep")

    def __init__(self, modulus: PrimeModulus, rep: Poly):
        self.modulus = modulus
        self.rep = rep

    def _other(self, other) -> Residue:
        if isinstance(other, Residue):
            if other.modulus.poly != self.modulus.poly:
                raise ValueError("residues modulo different primes")
            return other
        return self.modulus(other)

    def __add__(self, other):
        return Residue(self.modulus, self.rep + self._other(other).rep)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.modulus, self.rep - self._other(other).rep)

    def __neg__(self):
        return Residue(self.modulus, -self.rep)

    def __mul__(self, other):
        return Residue(self.modulus, (self.rep * self._other(other).rep) % self.modulus.poly)

    __rmul__ = __mul__

    def inverse(self) -> Residue:
        if self.rep.is_zero():
            raise NotInvertibleModPrime(f"zero has no inverse modulo {self.modulus}")
        _, s, _ = poly_xgcd(self.rep, self.modulus.poly)
        return Residue(self.modulus, s % self.modulus.poly)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __pow__(self, n: int) -> Residue:
        if n < 0:
            return self.inverse() ** (-n)
        return Residue(self.modulus, poly_powmod(self.rep, n, self.modulus.poly))

    def frobenius(self, i: int) -> Residue:
        """``self ** (q ** i)``."""
        return Residue(self.modulus, self.rep.frobenius(i) % self.modulus.poly)

    def __bool__(self) -> bool:
        return not self.rep.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Residue):
            return NotImplemented
        return self.modulus.poly == other.modulus.poly and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.modulus.poly, self.rep))

    def __str__(self) -> str:
        return str(self.rep)

    def __repr__(self) -> str:
        return f"Residue({self.rep} mod {self.modulus})"


def reduce_mod(x: RatFunc, prime: PrimeModulus) -> Residue:
    """Image of x in A/pA; the denominator must be prime to p."""
    den = x.den % prime.poly
    if den.is_zero():
        raise NotInvertibleModPrime(f"denominator {x.den} vanishes modulo {prime}")
    return Residue(prime, x.num % prime.poly) / Residue(prime, den)


def _zero(prime: PrimeModulus) -> Residue:
    return Residue(prime, Poly.zero(prime.field))


def _one(prime: PrimeModulus) -> Residue:
    return Residue(prime, Poly.one(prime.field))


def _chain_total(prime: PrimeModulus, levels, bound: int) -> Residue:
    """sum over bound > i_1 > ... > i_r >= 0 of levels[0](i_1) ... levels[-1](i_r)."""
    if bound <= 0:
        return _zero(prime)
    tails = chain_tails(levels[1:], bound - 1, _zero(prime), _one(prime))
    total = _zero(prime)
    for i in range(bound):
        if tails[i]:
            total = total + levels[0](i) * tails[i]
    return total


def power_sum(prime: PrimeModulus, k: int, s: int) -> Residue:
    """S_k(s) = sum_{a monic, deg a = k} a^{-s} mod p (k < deg p)."""
    total = _zero(prime)
    for a in enumerate_monic(prime.field, k):
        total = total + Residue(prime, a % prime.poly).inverse() ** s
    return total


def fmzv_direct(s: Sequence[int], prime: PrimeModulus) -> Residue:
    s = Index(s)
    blocks = {}

    def level(si: int):
        def f(k: int) -> Residue:
            if (k, si) not in blocks:
                blocks[(k, si)] = power_sum(prime, k, si)
            return blocks[(k, si)]
        return f

    return _chain_total(prime, [level(si) for si in s], prime.degree)


def fcmpl_direct(s: Sequence[int], z: Sequence[Poly], prime: PrimeModulus) -> Residue:
    """sum_{deg p > i_1 > ... > i_r >= 0} z_1^{q^{i_1}} ... z_r^{q^{i_r}} / (L_{i_1}^{s_1} ...) mod p."""
    s = Index(s)
    if len(z) != len(s):
        raise ValueError("need one argument per index entry")
    cache = carlitz_cache(prime.field)
    inv_L: dict[int, Residue] = {}

    def inverse_L(i: int) -> Residue:
        if i not in inv_L:
            try:
                inv_L[i] = prime(cache.L(i)).inverse()
            except NotInvertibleModPrime as exc:  # pragma: no cover - would be an arithmetic bug
                raise ArithmeticError(f"L_{i} not invertible modulo {prime}") from exc
        return inv_L[i]

    def level(zl: Poly, sl: int):
        base = prime(zl)
        return lambda i: base.frobenius(i) * inverse_L(i) ** sl

    return _chain_total(prime, [level(zl, sl) for zl, sl in zip(z, s)], prime.degree)


def gamma_product_check(s: Sequence[int], prime: PrimeModulus) -> Residue:
    """Return Gamma_{s_1} ... Gamma_{s_r} mod p, raising if p divides a factor."""
    total = _one(prime)
    for si in s:
        gamma = carlitz_gamma(prime.field, si)
        g = prime(gamma)
        if not g:
            raise HypothesisViolation(si, gamma, prime.poly)
        total = total * g
    return total


def fmzv_via_cmpl(s: Sequence[int], prime: PrimeModulus) -> Residue:
    """(1 / Gamma_s) sum_{j in J_s} a_j(theta) Li_{s}(u_j)_p."""
    s = Index(s)
    gamma = gamma_product_check(s, prime)
    data = index_data(prime.field, s)
    total = _zero(prime)
    for j in j_tuples(data):
        li = fcmpl_direct(s, data.weights(j), prime)
        if li:
            total = total + prime(a_j_at_theta(prime.field, j)) * li
    return total / gamma


def _bernoulli_ratio(prime: PrimeModulus, s: Index, j: tuple[int, ...], i: int) -> Residue:
    """(1 / L_i) BC^{s,j}_{q^i-1} / BC_{q^i-1} reduced mod p."""
    field = prime.field
    n = field.q ** i - 1
    value = mpbcn_closed(field, s, j, n)
    if not value:
        return _zero(prime)
    denom = bc(field, n) * carlitz_cache(field).L(i)
    return reduce_mod(value / denom, prime)


def fmzv_via_mpbcn(s: Sequence[int], prime: PrimeModulus) -> Residue:
    """(1 / Gamma_s) sum_j a_j(theta) sum_{i=r-1}^{deg p - 1} (1/L_i) BC^{s,j}_{q^i-1} / BC_{q^i-1}."""
    return fmzv_via_mpbcn_ones(0, s, prime)


def fmzv_via_mpbcn_ones(dd: int, s: Sequence[int], prime: PrimeModulus) -> Residue:
    """zeta((1,...,1 [dd times], s_1, ..., s_r))_p through MPBCNs of s alone.

    (1 / Gamma_s) sum_{j in J_s} a_j(theta) sum_{deg p > i_0 > ... > i_dd >= r-1}
    1 / (L_{i_0} ... L_{i_dd}) * BC^{s,j}_{q^{i_dd}-1} / BC_{q^{i_dd}-1}.
    """
    if dd < 0:
        raise ValueError("number of leading ones must be >= 0")
    s = Index(s)
    r = s.depth
    gamma = gamma_product_check(s, prime)
    cache = carlitz_cache(prime.field)
    data = index_data(prime.field, s)

    def inv_L(i: int) -> Residue:
        return prime(cache.L(i)).inverse()

    total = _zero(prime)
    for j in j_tuples(data):
        def last(i: int, j=j) -> Residue:
            return _bernoulli_ratio(prime, s, j, i) if i >= r - 1 else _zero(prime)

        inner = _chain_total(prime, [inv_L] * dd + [last], prime.degree)
        if inner:
            total = total + prime(a_j_at_theta(prime.field, j)) * inner
    return total / gamma
