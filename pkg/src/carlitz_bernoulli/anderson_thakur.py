"""Anderson-Thakur polynomials H_n in A[t] and the data derived from them.

H_n is defined through

    {1 - sum_i c_i x^{q^i}}^{-1} = sum_n H_n / Pi(n)|_{theta=t} x^n,
    c_i = prod_{j=1}^{i} (t^{q^i} - theta^{q^j}) / D_i|_{theta=t}.

Writing G_n = H_n / Pi(n)(t), the inverse satisfies G_n = sum_i c_i G_{n-q^i}.
Every denominator that appears is a product of D_k(t) powers, so each step
tracks exponent vectors over the D_k(t) and finishes with one exact division
whose remainder must vanish.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .bivariate import BiPoly, BiRat
from .carlitz import Index, carlitz_cache, log_floor, q_digits
from .fq import FqField
from .poly import Poly


class ATDenominatorError(ArithmeticError):
    """A generating-identity coefficient failed to clear its denominator."""


class ATBoundError(ArithmeticError):
    """A coefficient u_ij violated deg u_ij < s_i q / (q - 1)."""


JTuple = tuple[int, ...]


@dataclass(frozen=True)
class ATSeries:
    field: FqField
    polys: tuple[BiPoly, ...]

    @property
    def order(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, n: int) -> BiPoly:
        return self.polys[n]


def bracket_numerator(field: FqField, i: int) -> BiPoly:
    """prod_{j=1}^{i} (t^{q^i} - theta^{q^j})."""
    q = field.q
    out = BiPoly.one(field)
    for j in range(1, i + 1):
        out = out * (BiPoly.monomial(field, 0, q ** i) - BiPoly.monomial(field, q ** j, 0))
    return out


class _ATBuilder:
    def __init__(self, field: FqField):
        self.field = field
        self.polys: list[BiPoly] = [BiPoly.one(field)]
        self._numerators: dict[int, BiPoly] = {}

    def numerator(self, i: int) -> BiPoly:
        if i not in self._numerators:
            self._numerators[i] = bracket_numerator(self.field, i)
        return self._numerators[i]

    def extend(self, order: int) -> None:
        field, q = self.field, self.field.q
        cache = carlitz_cache(field)
        for n in range(len(self.polys), order + 1):
            width = log_floor(n, q) + 1
            digits_n = _padded(q_digits(n, q), width)
            parts = []
            for i in range(width):
                prev = n - q ** i
                expo = [a - b for a, b in zip(digits_n, _padded(q_digits(prev, q), width))]
                expo[i] -= 1
                parts.append((i, prev, expo))
            lift = [max(0, *(-e[k] for _, _, e in parts)) for k in range(width)]
            numerator = BiPoly.zero(field)
            for i, prev, expo in parts:
                term = self.numerator(i) * self.polys[prev]
                for k in range(width):
                    power = expo[k] + lift[k]
                    if power:
                        term = term.mul_t(cache.D(k) ** power)
                numerator = numerator + term
            denominator = Poly.one(field)
            for k in range(width):
                if lift[k]:
                    denominator = denominator * cache.D(k) ** lift[k]
            quot, rem = numerator.divmod_t(denominator)
            if not rem.is_zero():
                raise ATDenominatorError(f"H_{n} does not clear its denominator")
            self.polys.append(quot)


def _padded(digits: list[int], width: int) -> list[int]:
    return digits + [0] * (width - len(digits))


_builders: dict[FqField, _ATBuilder] = {}


def at_polynomials(field: FqField, order: int) -> ATSeries:
    """H_0 .. H_order, each verified to lie in F_q[theta, t]."""
    builder = _builders.get(field)
    if builder is None:
        builder = _builders.setdefault(field, _ATBuilder(field))
    builder.extend(order)
    return ATSeries(field, tuple(builder.polys[: order + 1]))


def generating_identity_residual(series: ATSeries) -> list[int]:
    """Re-substitute H_n into the defining identity; return exponents n where it fails.

    Checks ``(sum_n H_n / Pi(n)(t) x^n) * (1 - sum_i c_i x^{q^i}) = 1 + O(x^{N+1})``
    coefficient by coefficient in fractions over F_q[theta, t].
    """
    field = series.field
    q = field.q
    cache = carlitz_cache(field)

    def g(n: int) -> BiRat:
        return BiRat(series[n], BiPoly.from_t(cache.factorial(n)))

    failures = []
    for n in range(series.order + 1):
        total = g(n)
        i = 0
        while q ** i <= n:
            c = BiRat(bracket_numerator(field, i), BiPoly.from_t(cache.D(i)))
            total = total - c * g(n - q ** i)
            i += 1
        expected = BiRat(BiPoly.one(field) if n == 0 else BiPoly.zero(field))
        if not total == expected:
            failures.append(n)
    return failures


@dataclass(frozen=True)
class IndexData:
    """Expansions H_{s_i - 1} = sum_j u_ij t^j for each entry of an index."""

    s: Index
    u: tuple[tuple[Poly, ...], ...]

    @property
    def m(self) -> tuple[int, ...]:
        return tuple(len(ui) - 1 for ui in self.u)

    def weights(self, j: Sequence[int]) -> tuple[Poly, ...]:
        """u_j = (u_{1 j_1}, ..., u_{r j_r})."""
        if len(j) != len(self.u) or any(not 0 <= ji < len(ui) for ji, ui in zip(j, self.u)):
            raise ValueError(f"{tuple(j)} is not in J_s for s = {tuple(self.s)}")
        return tuple(ui[ji] for ui, ji in zip(self.u, j))


def coefficient_bound_ok(field: FqField, u: Poly, s: int) -> bool:
    """deg u < s q / (q - 1), compared exactly (zero always passes)."""
    if u.is_zero():
        return True
    return Fraction(int(u.degree)) < Fraction(s * field.q, field.q - 1)


_index_cache: dict[tuple[FqField, Index], IndexData] = {}


def index_data(field: FqField, s: Sequence[int]) -> IndexData:
    s = Index(s)
    key = (field, s)
    hit = _index_cache.get(key)
    if hit is not None:
        return hit
    series = at_polynomials(field, max(s) - 1)
    u = []
    for si in s:
        coeffs = tuple(series[si - 1].t_coefficients())
        if not coeffs or coeffs[-1].is_zero():
            raise ATBoundError(f"H_{si - 1} has a vanishing top coefficient")
        for c in coeffs:
            if not coefficient_bound_ok(field, c, si):
                raise ATBoundError(f"deg {c} >= {si}*q/(q-1) in H_{si - 1}")
        u.append(coeffs)
    data = IndexData(s, tuple(u))
    _index_cache[key] = data
    return data


def j_tuples(data: IndexData) -> Iterator[JTuple]:
    """J_s in lexicographic order."""
    return itertools.product(*(range(mi + 1) for mi in data.m))


def a_j_at_theta(field: FqField, j: Sequence[int]) -> Poly:
    """a_j(theta) = theta^{j_1 + ... + j_r}."""
    return Poly.monomial(field, sum(j))
