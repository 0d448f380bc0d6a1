"""Bernoulli-Carlitz numbers and multi-poly-Bernoulli-Carlitz numbers (MPBCNs).

Each quantity has a closed-form route (finite sums of Stirling-Carlitz
numbers) and an independent generating-series route:

* ``BC_n``: ``sum_n BC_n z^n / Pi(n) = z / e_C(z)``.
* ``BC^{s,j}_n``: ``sum_n BC^{s,j}_n z^n / Pi(n) = Li_s(e_C(z) u_{1j_1}, u_{2j_2}, ...) / e_C(z)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .anderson_thakur import index_data
from .carlitz import (
    Index,
    carlitz_cache,
    carlitz_exp,
    chain_tails,
    cmpl_series,
    log_floor,
    polylog_factor,
)
from .fq import FqField
from .poly import RatFunc
from .series import series_inv
from .stirling import stirling_table


@dataclass(frozen=True)
class MPBCKey:
    s: Index
    j: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "s", Index(self.s))
        object.__setattr__(self, "j", tuple(int(x) for x in self.j))
        if len(self.j) != len(self.s):
            raise ValueError("j must have the same length as s")
        if self.n < 0:
            raise ValueError("n must be non-negative")


def _bc_weight(field: FqField, j: int) -> RatFunc:
    """(-1)^j D_j / L_j^2."""
    cache = carlitz_cache(field)
    sign = -1 if j % 2 else 1
    return RatFunc(cache.D(j) * sign, cache.L(j) ** 2)


def bc(field: FqField, n: int) -> RatFunc:
    """BC_n = sum_{q^j - 1 <= n} (-1)^j D_j / L_j^2 {n brace q^j - 1}_C."""
    if n < 0:
        raise ValueError("BC_n needs n >= 0")
    table = stirling_table(field)
    total = RatFunc.zero(field)
    j = 0
    while field.q ** j - 1 <= n:
        st = table.value(n, field.q ** j - 1)
        if st:
            total = total + _bc_weight(field, j) * st
        j += 1
    return total


def bc_series_oracle(field: FqField, order: int) -> list[RatFunc]:
    """[BC_0, ..., BC_order] read off z / e_C(z)."""
    cache = carlitz_cache(field)
    unit = carlitz_exp(field, order + 1).shift_down(1)
    inv = series_inv(unit)
    return [inv[n] * cache.factorial(n) if inv[n] else RatFunc.zero(field) for n in range(order + 1)]


class _ClosedFormWeights:
    """W_{i_1} = Pi(q^{i_1}-1) u_1^{q^{i_1}} / L_{i_1}^{s_1} * (inner chain sum) for one (s, j)."""

    def __init__(self, field: FqField, s: Index, j: tuple[int, ...]):
        self.field = field
        self.s = s
        self.weights = index_data(field, s).weights(j)
        self.values: list[RatFunc] = []

    def upto(self, imax: int) -> list[RatFunc]:
        if len(self.values) > imax:
            return self.values
        field, s, w = self.field, self.s, self.weights
        cache = carlitz_cache(field)
        zero, one = RatFunc.zero(field), RatFunc.one(field)
        levels = [polylog_factor(field, wl, sl) for wl, sl in zip(w[1:], s[1:])]
        tails = chain_tails(levels, imax, zero, one)
        first = polylog_factor(field, w[0], s[0])
        out = []
        for i1 in range(imax + 1):
            if i1 < len(s) - 1 or not tails[i1]:
                out.append(zero)
            else:
                out.append(first(i1) * tails[i1] * cache.factorial(field.q ** i1 - 1))
        self.values = out
        return out


_weights: dict[tuple, _ClosedFormWeights] = {}
_memo: dict[tuple[FqField, MPBCKey], RatFunc] = {}
_memo_lock = threading.Lock()


def mpbcn_closed(field: FqField, s: Sequence[int], j: Sequence[int], n: int) -> RatFunc:
    """BC^{s,j}_n from the explicit finite sum over q^{i_1} <= n + 1."""
    key = MPBCKey(Index(s), tuple(j), n)
    hit = _memo.get((field, key))
    if hit is not None:
        return hit
    wkey = (field, key.s, key.j)
    weights = _weights.get(wkey)
    if weights is None:
        weights = _weights.setdefault(wkey, _ClosedFormWeights(field, key.s, key.j))
    imax = log_floor(n + 1, field.q)
    w = weights.upto(imax)
    table = stirling_table(field)
    total = RatFunc.zero(field)
    for i1 in range(key.s.depth - 1, imax + 1):
        if w[i1]:
            st = table.value(n, field.q ** i1 - 1)
            if st:
                total = total + st * w[i1]
    with _memo_lock:
        _memo[(field, key)] = total
    return total


def mpbcn_series_oracle(field: FqField, s: Sequence[int], j: Sequence[int], order: int) -> list[RatFunc]:
    """[BC^{s,j}_0, ..., BC^{s,j}_order] read off Li_s(e_C(z) u_j) / e_C(z)."""
    cache = carlitz_cache(field)
    weights = index_data(field, s).weights(j)
    li = cmpl_series(field, s, weights, order + 1).shift_down(1)
    quotient = li * series_inv(carlitz_exp(field, order + 1).shift_down(1))
    return [quotient[n] * cache.factorial(n) if quotient[n] else RatFunc.zero(field)
            for n in range(order + 1)]


def mpbcn_special_ones(field: FqField, r: int, n: int) -> RatFunc:
    """BC^{(1,..,1),(0,..,0)}_n written through ordinary Bernoulli-Carlitz numbers.

    sum over log_q(n+1) >= i_1 > ... > i_r >= 0 of
    {n brace q^{i_1}-1}_C BC_{q^{i_1}-1} prod_{l>=2} BC_{q^{i_l}-1} / Pi(q^{i_l}-1).
    """
    q = field.q
    if r < 1:
        raise ValueError("depth must be >= 1")
    if n < q ** (r - 1) - 1:
        raise ValueError(f"need n >= q^(r-1) - 1 = {q ** (r - 1) - 1}, got n = {n}")
    cache = carlitz_cache(field)
    table = stirling_table(field)
    imax = log_floor(n + 1, q)

    def ratio(i: int) -> RatFunc:
        return bc(field, q ** i - 1) * RatFunc(cache.factorial(0), cache.factorial(q ** i - 1))

    tails = chain_tails([ratio] * (r - 1), imax, RatFunc.zero(field), RatFunc.one(field))
    total = RatFunc.zero(field)
    for i1 in range(r - 1, imax + 1):
        if tails[i1]:
            st = table.value(n, q ** i1 - 1)
            if st:
                total = total + st * bc(field, q ** i1 - 1) * tails[i1]
    return total


@dataclass(frozen=True)
class RecursionWitness:
    lhs: RatFunc
    rhs: RatFunc

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def mpbcn_recursion_check(field: FqField, s: Sequence[int], j: Sequence[int], m: int) -> RecursionWitness:
    """Compare BC^{s,j}_{q^m-1} with
    BC^{(s_1),(j_1)}_{q^m-1} * sum_{a=1}^{m-(r-2)} BC^{(s_2..),(j_2..)}_{q^{m-a}-1} / Pi(q^{m-a}-1).
    """
    s, j = Index(s), tuple(j)
    r = s.depth
    if r < 2:
        raise ValueError("the recursion needs depth >= 2")
    if m < r - 1:
        raise ValueError(f"need m >= r - 1 = {r - 1}")
    q = field.q
    cache = carlitz_cache(field)
    lhs = mpbcn_closed(field, s, j, q ** m - 1)
    inner = RatFunc.zero(field)
    for a in range(1, m - (r - 2) + 1):
        n = q ** (m - a) - 1
        inner = inner + mpbcn_closed(field, s[1:], j[1:], n) * RatFunc(cache.factorial(0), cache.factorial(n))
    rhs = mpbcn_closed(field, s[:1], j[:1], q ** m - 1) * inner
    return RecursionWitness(lhs, rhs)
