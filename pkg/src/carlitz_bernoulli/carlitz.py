"""Carlitz-module quantities over A = F_q[theta].

``D_i = prod_{j<i} (theta^{q^i} - theta^{q^j})`` and
``L_i = prod_{1<=j<=i} (theta - theta^{q^j})`` (kept with its literal sign,
leading coefficient ``(-1)^i``), the Carlitz factorial
``Pi(n) = prod D_i^{n_i}`` over the q-adic digits of n, the exponential and
logarithm series, and the one-variable composite
``Li_s(e_C(z) w_1, w_2, ..., w_r)``.
"""

from __future__ import annotations

import threading
from typing import Callable, Iterable, Sequence, TypeVar

from .fq import FqField
from .poly import Poly, RatFunc
from .series import TruncSeries, series_frob_pow

DEFAULT_I_MAX = 12

R = TypeVar("R")


class Index(tuple):
    """A multi-index (s_1, ..., s_r) of positive integers, r >= 1."""

    def __new__(cls, s: Iterable[int]):
        s = tuple(int(x) for x in s)
        if not s:
            raise ValueError("an index needs depth >= 1")
        if any(x < 1 for x in s):
            raise ValueError(f"index entries must be positive, got {s}")
        return super().__new__(cls, s)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Index{tuple(self)}"


def q_digits(n: int, q: int) -> list[int]:
    """Base-q digits of n, least significant first."""
    if n < 0:
        raise ValueError("digits of a negative integer")
    out = []
    while n:
        n, d = divmod(n, q)
        out.append(d)
    return out


def log_floor(n: int, q: int) -> int:
    """Largest i with q**i <= n (n >= 1)."""
    i = 0
    while q ** (i + 1) <= n:
        i += 1
    return i


class CarlitzCache:
    """Memo tables for D_i, L_i and Pi(n) over one field."""

    def __init__(self, field: FqField, i_max: int = DEFAULT_I_MAX):
        self.field = field
        self.i_max = i_max
        self._D: dict[int, Poly] = {0: Poly.one(field)}
        self._L: dict[int, Poly] = {0: Poly.one(field)}
        self._fact: dict[int, Poly] = {}

    def _check_i(self, i: int) -> None:
        if i < 0:
            raise ValueError("index must be non-negative")
        if i > self.i_max:
            raise ValueError(f"i = {i} exceeds the configured limit {self.i_max}")

    def D(self, i: int) -> Poly:
        d = self._D.get(i)
        if d is not None:
            return d
        self._check_i(i)
        q = self.field.q
        theta = Poly.theta(self.field)
        top = Poly.monomial(self.field, q ** i)
        d = Poly.one(self.field)
        for j in range(i):
            d = d * (top - theta.frobenius(j))
        assert d.is_monic() and d.degree == i * q ** i
        self._D[i] = d
        return d

    def L(self, i: int) -> Poly:
        val = self._L.get(i)
        if val is not None:
            return val
        self._check_i(i)
        q = self.field.q
        theta = Poly.theta(self.field)
        val = Poly.one(self.field)
        for j in range(1, i + 1):
            val = val * (theta - Poly.monomial(self.field, q ** j))
        assert val.degree == sum(q ** j for j in range(1, i + 1))
        assert val.leading == (-self.field.one) ** i
        self._L[i] = val
        return val

    def factorial(self, n: int) -> Poly:
        val = self._fact.get(n)
        if val is not None:
            return val
        val = Poly.one(self.field)
        for i, d in enumerate(q_digits(n, self.field.q)):
            if d:
                val = val * self.D(i) ** d
        self._fact[n] = val
        return val


_caches: dict[FqField, CarlitzCache] = {}
_caches_lock = threading.Lock()


def carlitz_cache(field: FqField) -> CarlitzCache:
    cache = _caches.get(field)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(field, CarlitzCache(field))
    return cache


def compute_D(field: FqField, i: int) -> Poly:
    return carlitz_cache(field).D(i)


def compute_L(field: FqField, i: int) -> Poly:
    return carlitz_cache(field).L(i)


def carlitz_factorial(field: FqField, n: int) -> Poly:
    """Pi(n) = Gamma_{n+1}."""
    return carlitz_cache(field).factorial(n)


def carlitz_gamma(field: FqField, s: int) -> Poly:
    """Gamma_s = Pi(s - 1) for s >= 1."""
    if s < 1:
        raise ValueError("Gamma_s needs s >= 1")
    return carlitz_factorial(field, s - 1)


def _sparse_qpower_series(field: FqField, order: int, coeff: Callable[[int], Poly]) -> TruncSeries:
    terms = {}
    i = 0
    while field.q ** i <= order:
        terms[field.q ** i] = RatFunc(Poly.one(field), coeff(i))
        i += 1
    return TruncSeries.from_sparse(field, terms, order)


def carlitz_exp(field: FqField, order: int) -> TruncSeries:
    """e_C(z) = sum_i z^{q^i} / D_i up to z^order."""
    cache = carlitz_cache(field)
    return _sparse_qpower_series(field, order, cache.D)


def carlitz_log(field: FqField, order: int) -> TruncSeries:
    """log_C(z) = sum_i z^{q^i} / L_i up to z^order."""
    cache = carlitz_cache(field)
    return _sparse_qpower_series(field, order, cache.L)


def chain_tails(levels: Sequence[Callable[[int], R]], bound: int, zero: R, one: R) -> list[R]:
    """Nested sums over strictly decreasing chains.

    Returns ``tails`` with ``tails[i] = sum_{i > i_2 > ... > i_r >= 0} f_2(i_2) ... f_r(i_r)``
    for ``0 <= i <= bound``, where ``levels = [f_2, ..., f_r]``.  With no
    levels every entry is ``one``.
    """
    tail = [one] * (bound + 1)
    for f in reversed(levels):
        new = []
        acc = zero
        for i in range(bound + 1):
            new.append(acc)
            if i < bound:
                acc = acc + f(i) * tail[i]
        tail = new
    return tail


def polylog_factor(field: FqField, weight: Poly, s: int) -> Callable[[int], RatFunc]:
    """i -> weight^{q^i} / L_i^s."""
    cache = carlitz_cache(field)
    return lambda i: RatFunc(weight.frobenius(i), cache.L(i) ** s)


def cmpl_series(field: FqField, s: Sequence[int], weights: Sequence[Poly], order: int) -> TruncSeries:
    """Li_s(e_C(z) w_1, w_2, ..., w_r) as a series in z up to z^order.

    The i_1 term starts at z^{q^{i_1}}, so only i_1 with q^{i_1} <= order
    contribute and the truncation is exact.
    """
    s = Index(s)
    if len(weights) != len(s):
        raise ValueError("need one weight per index entry")
    if order < 1:
        return TruncSeries.zero(field, order)
    imax = log_floor(order, field.q)
    zero, one = RatFunc.zero(field), RatFunc.one(field)
    levels = [polylog_factor(field, w, si) for w, si in zip(weights[1:], s[1:])]
    tails = chain_tails(levels, imax, zero, one)
    first = polylog_factor(field, weights[0], s[0])
    exp_series = carlitz_exp(field, order)
    total = TruncSeries.zero(field, order)
    for i1 in range(len(s) - 1, imax + 1):
        if not tails[i1]:
            continue
        c = first(i1) * tails[i1]
        if c:
            total = total + series_frob_pow(exp_series, i1).scale(c)
    return total
