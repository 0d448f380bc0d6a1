"""Stirling-Carlitz numbers of the second kind.

``{n brace m}_C`` is defined by ``e_C(z)^m / Pi(m) = sum_n {n brace m}_C z^n / Pi(n)``.
The power e_C(z)^m is assembled from the q-adic digits of m as
``prod_i (e_C(z)^{q^i})^{m_i}``, each factor a Frobenius twist of e_C.
"""

from __future__ import annotations

import threading

from .carlitz import carlitz_cache, carlitz_exp, q_digits
from .fq import FqField
from .poly import Poly, RatFunc
from .series import TruncSeries, series_frob_pow


def digit_sum(n: int, q: int) -> int:
    """lambda(n): sum of the base-q digits of n."""
    return sum(q_digits(n, q))


def exp_power(field: FqField, m: int, order: int) -> TruncSeries:
    """e_C(z)^m truncated at z^order."""
    base = carlitz_exp(field, order)
    result = TruncSeries.one(field, order)
    for i, digit in enumerate(q_digits(m, field.q)):
        if not digit:
            continue
        twisted = series_frob_pow(base, i)
        for _ in range(digit):
            result = result * twisted
    return result


class StirlingTable:
    """Columns ``n -> {n brace m}_C`` memoised per m."""

    def __init__(self, field: FqField):
        self.field = field
        self._columns: dict[int, list[RatFunc]] = {}
        self._lock = threading.Lock()

    def column(self, m: int, order: int) -> list[RatFunc]:
        """``[{n brace m}_C for n in 0..order]``."""
        requested = order
        col = self._columns.get(m)
        if col is not None:
            if len(col) > order:
                return col[: order + 1]
            # grow geometrically so increasing requests stay cheap
            order = max(order, 2 * (len(col) - 1))
        field = self.field
        cache = carlitz_cache(field)
        if m > order:
            col = [RatFunc.zero(field)] * (order + 1)
        else:
            series = exp_power(field, m, order)
            inv_fm = RatFunc(Poly.one(field), cache.factorial(m))
            col = [RatFunc.zero(field)] * m
            for n in range(m, order + 1):
                c = series[n]
                col.append(c * cache.factorial(n) * inv_fm if c else RatFunc.zero(field))
        with self._lock:
            old = self._columns.get(m)
            if old is None or len(old) < len(col):
                self._columns[m] = col
        return col[: requested + 1]

    def value(self, n: int, m: int) -> RatFunc:
        if n < 0 or m < 0:
            raise ValueError("Stirling-Carlitz numbers need n, m >= 0")
        return self.column(m, n)[n]


_tables: dict[FqField, StirlingTable] = {}


def stirling_table(field: FqField) -> StirlingTable:
    table = _tables.get(field)
    if table is None:
        table = _tables.setdefault(field, StirlingTable(field))
    return table


def stirling_carlitz(field: FqField, n: int, m: int) -> RatFunc:
    return stirling_table(field).value(n, m)
