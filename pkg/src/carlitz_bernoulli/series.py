"""Formal power series in z over k = F_q(theta), truncated at an explicit order.

A series of order N knows the coefficients of z^0 .. z^N exactly and nothing
beyond; binary operations propagate the smaller order and asking for a
coefficient past N raises :class:`TruncationError`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fq import FqField
from .poly import Poly, RatFunc


class TruncationError(IndexError):
    """A coefficient beyond the known truncation order was requested."""


class TruncSeries:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs: Sequence[RatFunc], order: int | None = None):
        coeffs = [RatFunc.coerce(field, c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            coeffs = coeffs[: order + 1]
            coeffs += [RatFunc.zero(field)] * (order + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, field: FqField, coeffs: list[RatFunc]) -> TruncSeries:
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, field: FqField, order: int) -> TruncSeries:
        return cls._raw(field, [RatFunc.zero(field)] * (order + 1))

    @classmethod
    def one(cls, field: FqField, order: int) -> TruncSeries:
        return cls.monomial(field, 0, order)

    @classmethod
    def monomial(cls, field: FqField, exponent: int, order: int, coeff=1) -> TruncSeries:
        out = [RatFunc.zero(field)] * (order + 1)
        if exponent <= order:
            out[exponent] = RatFunc.coerce(field, coeff)
        return cls._raw(field, out)

    @classmethod
    def from_sparse(cls, field: FqField, terms: dict[int, RatFunc], order: int) -> TruncSeries:
        out = [RatFunc.zero(field)] * (order + 1)
        for n, c in terms.items():
            if n <= order:
                out[n] = RatFunc.coerce(field, c)
        return cls._raw(field, out)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> RatFunc:
        if n < 0:
            raise IndexError("negative exponent")
        if n > self.order:
            raise TruncationError(f"coefficient of z^{n} unknown beyond order {self.order}")
        return self.coeffs[n]

    def support(self) -> list[int]:
        return [n for n, c in enumerate(self.coeffs) if c]

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise TruncationError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries._raw(self.field, self.coeffs[: order + 1])

    def _check(self, other: TruncSeries) -> None:
        if other.field is not self.field:
            self.field.check(other.field)

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries._raw(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries._raw(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> TruncSeries:
        return TruncSeries._raw(self.field, [-a for a in self.coeffs])

    def scale(self, c) -> TruncSeries:
        c = RatFunc.coerce(self.field, c)
        return TruncSeries._raw(self.field, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __pow__(self, n: int) -> TruncSeries:
        if n < 0:
            return series_inv(self) ** (-n)
        result = TruncSeries.one(self.field, self.order)
        base = self
        while n:
            if n & 1:
                result = series_mul(result, base)
            n >>= 1
            if n:
                base = series_mul(base, base)
        return result

    def shift_down(self, k: int = 1) -> TruncSeries:
        """Divide by z^k; the lowest k coefficients must vanish.  Order drops by k."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by z^{k}")
        if k > self.order:
            raise TruncationError("shift exceeds the truncation order")
        return TruncSeries._raw(self.field, self.coeffs[k:])

    def frobenius(self, i: int) -> TruncSeries:
        return series_frob_pow(self, i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = [f"{c}*z^{n}" for n, c in enumerate(self.coeffs) if c]
        return f"TruncSeries({' + '.join(terms) or '0'} + O(z^{self.order + 1}))"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product; the result has order ``min(a.order, b.order)``.  Zero terms are skipped."""
    a._check(b)
    order = min(a.order, b.order)
    sa = [(n, c) for n, c in enumerate(a.coeffs[: order + 1]) if c]
    sb = [(n, c) for n, c in enumerate(b.coeffs[: order + 1]) if c]
    acc: dict[int, list[RatFunc]] = {}
    for i, ca in sa:
        for j, cb in sb:
            if i + j > order:
                break
            acc.setdefault(i + j, []).append(ca * cb)
    out = [RatFunc.zero(a.field)] * (order + 1)
    for n, parts in acc.items():
        out[n] = rat_sum(a.field, parts)
    return TruncSeries._raw(a.field, out)


def series_inv(s: TruncSeries) -> TruncSeries:
    """Multiplicative inverse of a unit series, same order."""
    c0 = s.coeffs[0]
    if not c0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = c0.inverse()
    tail = [(k, c) for k, c in enumerate(s.coeffs) if k and c]
    out = [inv0]
    for n in range(1, s.order + 1):
        parts = [c * out[n - k] for k, c in tail if k <= n and out[n - k]]
        out.append(-(rat_sum(s.field, parts) * inv0) if parts else RatFunc.zero(s.field))
    return TruncSeries._raw(s.field, out)


def series_frob_pow(s: TruncSeries, i: int) -> TruncSeries:
    """``s ** (q ** i)`` in characteristic p: z^n c -> z^(n q^i) c^(q^i)."""
    if i == 0:
        return s
    step = s.field.q ** i
    out = [RatFunc.zero(s.field)] * (s.order + 1)
    for n in range(0, s.order // step + 1):
        c = s.coeffs[n]
        if c:
            out[n * step] = c.frobenius(i)
    return TruncSeries._raw(s.field, out)


def rat_sum(field: FqField, terms: Iterable[RatFunc]) -> RatFunc:
    """Sum of rational functions, grouping equal denominators first."""
    groups: dict[tuple, tuple[Poly, list[Poly]]] = {}
    for t in terms:
        if not t:
            continue
        key = tuple(t.den.codes)
        if key in groups:
            groups[key][1].append(t.num)
        else:
            groups[key] = (t.den, [t.num])
    total = RatFunc.zero(field)
    for den, nums in groups.values():
        num = nums[0]
        for extra in nums[1:]:
            num = num + extra
        total = total + RatFunc(num, den)
    return total
