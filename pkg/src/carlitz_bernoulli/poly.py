"""Polynomials in A = F_q[theta] and rational functions in k = F_q(theta).

Polynomial arithmetic is delegated to FLINT (``nmod_poly`` over prime fields,
``fq_default_poly`` over extension fields, built on the same modulus as the
:class:`~carlitz_bernoulli.fq.FqField`).  Everything above this module only
sees :class:`Poly` and :class:`RatFunc`.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import flint

from .fq import FqElem, FqField

NEG_INF = -math.inf


class _Backend:
    """Conversion between integer coefficient codes and FLINT polynomials."""

    def __init__(self, field: FqField):
        self.field = field
        if field.e == 1:
            p = field.p
            self.extension = False
            self.make = lambda codes: flint.nmod_poly(list(codes), p)
            self.codes = lambda f: [int(c) for c in f.coeffs()]
        else:
            base = flint.fmpz_mod_poly_ctx(field.p)
            ctx = flint.fq_default_ctx(modulus=base(list(field.modulus)), var="u")
            ring = flint.fq_default_poly_ctx(ctx)
            elems = [ctx(field._vec(c)) for c in range(field.q)]
            back = {el: c for c, el in enumerate(elems)}
            self.extension = True
            self.ctx = ctx
            self.elems = elems
            self.make = lambda codes: ring([elems[c] for c in codes])
            self.codes = lambda f: [back[c] for c in f.coeffs()]
        self.zero = self.make([])
        self.one = self.make([1])

    def scalar(self, code: int):
        if self.extension:
            return self.elems[code]
        return code


def backend(field: FqField) -> _Backend:
    if field._backend is None:
        field._backend = _Backend(field)
    return field._backend


def _scalar_code(field: FqField, c) -> int:
    if isinstance(c, FqElem):
        field.check(c.field)
        return c.code
    if isinstance(c, int):
        return c % field.p
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class Poly:
    """An element of F_q[theta] (also used for univariate polynomials in t)."""

    __slots__ = ("field", "_f")

    def __init__(self, field: FqField, coeffs: Iterable[FqElem | int] = ()):
        self.field = field
        self._f = backend(field).make([_scalar_code(field, c) for c in coeffs])

    @classmethod
    def _wrap(cls, field: FqField, f) -> Poly:
        obj = cls.__new__(cls)
        obj.field = field
        obj._f = f
        return obj

    @classmethod
    def from_codes(cls, field: FqField, codes: Sequence[int]) -> Poly:
        return cls._wrap(field, backend(field).make(codes))

    @classmethod
    def zero(cls, field: FqField) -> Poly:
        return cls._wrap(field, backend(field).zero)

    @classmethod
    def one(cls, field: FqField) -> Poly:
        return cls._wrap(field, backend(field).one)

    @classmethod
    def monomial(cls, field: FqField, degree: int, coeff: FqElem | int = 1) -> Poly:
        return cls.from_codes(field, [0] * degree + [_scalar_code(field, coeff)])

    @classmethod
    def theta(cls, field: FqField) -> Poly:
        return cls.monomial(field, 1)

    # -- inspection --
    @property
    def degree(self) -> int | float:
        """Degree in theta; the zero polynomial has degree ``-inf``."""
        d = self._f.degree()
        return NEG_INF if d < 0 else d

    @property
    def codes(self) -> list[int]:
        return backend(self.field).codes(self._f)

    @property
    def coeffs(self) -> list[FqElem]:
        return [FqElem(self.field, c) for c in self.codes]

    def __getitem__(self, k: int) -> FqElem:
        codes = self.codes
        return FqElem(self.field, codes[k] if 0 <= k < len(codes) else 0)

    @property
    def leading(self) -> FqElem:
        codes = self.codes
        return FqElem(self.field, codes[-1] if codes else 0)

    def is_zero(self) -> bool:
        return self._f.is_zero()

    def is_one(self) -> bool:
        return self._f.is_one()

    def is_monic(self) -> bool:
        return not self._f.is_zero() and self.leading.code == 1

    def __bool__(self) -> bool:
        return not self._f.is_zero()

    # -- arithmetic --
    def _coerce(self, other) -> object:
        if isinstance(other, Poly):
            if other.field is not self.field:
                self.field.check(other.field)
            return other._f
        if isinstance(other, (int, FqElem)):
            return backend(self.field).make([_scalar_code(self.field, other)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(self.field, self._f + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(self.field, self._f - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(self.field, o - self._f)

    def __neg__(self):
        return Poly._wrap(self.field, -self._f)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(self.field, self._f * o)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return Poly._wrap(self.field, self._f ** n)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def __truediv__(self, other):
        return RatFunc(self, other if isinstance(other, Poly) else Poly(self.field, [other]))

    def monic(self) -> Poly:
        if self._f.is_zero():
            raise ZeroDivisionError("the zero polynomial has no monic associate")
        lc = self._f.leading_coefficient()
        return Poly._wrap(self.field, self._f * lc ** -1)

    def inflate(self, k: int) -> Poly:
        """Substitute theta -> theta^k."""
        if k == 1 or self.degree <= 0:
            return self
        codes = self.codes
        out = [0] * ((len(codes) - 1) * k + 1)
        out[::k] = codes
        return Poly.from_codes(self.field, out)

    def frobenius(self, i: int = 1) -> Poly:
        """Return ``self ** (q ** i)``, computed as theta -> theta^(q^i)."""
        return self.inflate(self.field.q ** i)

    def divides(self, other: Poly) -> bool:
        return poly_divmod(other, self)[1].is_zero()

    # -- comparison / display --
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self._f == other._f
        if isinstance(other, (int, FqElem)):
            return self._f == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.codes)))

    def to_text(self, var: str = "T") -> str:
        return poly_text(self.field, self.codes, var)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def poly_text(field: FqField, codes: Sequence[int], var: str = "T") -> str:
    """Canonical text: decreasing degree, ``2*T^3+T+1`` style."""
    terms = []
    for k in range(len(codes) - 1, -1, -1):
        c = codes[k]
        if not c:
            continue
        ctext = field.element_text(c)
        if k == 0:
            terms.append(ctext)
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if c == 1:
            terms.append(mono)
        elif "+" in ctext or "*" in ctext:
            terms.append(f"({ctext})*{mono}")
        else:
            terms.append(f"{ctext}*{mono}")
    return "+".join(terms) if terms else "0"


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``a = quot * b + rem`` with ``deg rem < deg b``."""
    if b.field is not a.field:
        a.field.check(b.field)
    if b._f.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    quot, rem = divmod(a._f, b._f)
    return Poly._wrap(a.field, quot), Poly._wrap(a.field, rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if b.field is not a.field:
        a.field.check(b.field)
    g = Poly._wrap(a.field, a._f.gcd(b._f))
    return g if g.is_monic() else g.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` monic."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = Poly.one(a.field), Poly.zero(a.field)
    t0, t1 = s1, s0
    while not r1.is_zero():
        quot, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    inv = r0.leading.inverse()
    return r0 * inv, s0 * inv, t0 * inv


class RatFunc:
    """An element of k = F_q(theta) as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            self.num, self.den = num, Poly.one(num.field)
            return
        if den.field is not num.field:
            num.field.check(den.field)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = num._f.gcd(den._f)
        n, d = num._f, den._f
        if not g.is_one():
            n, d = n // g, d // g
        lc = d.leading_coefficient()
        if lc != 1:
            inv = lc ** -1
            n, d = n * inv, d * inv
        self.num = Poly._wrap(num.field, n)
        self.den = Poly._wrap(num.field, d)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFunc:
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def zero(cls, field: FqField) -> RatFunc:
        return cls._raw(Poly.zero(field), Poly.one(field))

    @classmethod
    def one(cls, field: FqField) -> RatFunc:
        return cls._raw(Poly.one(field), Poly.one(field))

    @classmethod
    def coerce(cls, field: FqField, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls._raw(x, Poly.one(field))
        return cls._raw(Poly(field, [x]), Poly.one(field))

    @property
    def field(self) -> FqField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num._f.is_zero()

    def __bool__(self) -> bool:
        return not self.num._f.is_zero()

    def is_polynomial(self) -> bool:
        return self.den._f.is_one()

    def _other(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            if other.num.field is not self.num.field:
                self.field.check(other.field)
            return other
        if isinstance(other, (Poly, int, FqElem)):
            return RatFunc.coerce(self.field, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num._f.is_zero():
            return self
        if self.num._f.is_zero():
            return o
        a, b, c, d = self.num._f, self.den._f, o.num._f, o.den._f
        field = self.field
        if b == d:
            n = a + c
            if n.is_zero():
                return RatFunc.zero(field)
            g = n.gcd(b)
            if g.is_one():
                return RatFunc._raw(Poly._wrap(field, n), self.den)
            return RatFunc._raw(Poly._wrap(field, n // g), Poly._wrap(field, b // g))
        g = b.gcd(d)
        if g.is_one():
            return RatFunc._raw(Poly._wrap(field, a * d + b * c), Poly._wrap(field, b * d))
        b1, d1 = b // g, d // g
        n = a * d1 + c * b1
        if n.is_zero():
            return RatFunc.zero(field)
        g2 = n.gcd(g)
        if not g2.is_one():
            n = n // g2
            g = g // g2
        return RatFunc._raw(Poly._wrap(field, n), Poly._wrap(field, b1 * d1 * g))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        field = self.field
        a, b, c, d = self.num._f, self.den._f, o.num._f, o.den._f
        if a.is_zero() or c.is_zero():
            return RatFunc.zero(field)
        g1 = a.gcd(d)
        if not g1.is_one():
            a, d = a // g1, d // g1
        g2 = c.gcd(b)
        if not g2.is_one():
            c, b = c // g2, b // g2
        return RatFunc._raw(Poly._wrap(field, a * c), Poly._wrap(field, b * d))

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num._f.is_zero():
            raise ZeroDivisionError("inverse of zero in F_q(theta)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(self.field, other) * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    def frobenius(self, i: int = 1) -> RatFunc:
        """``self ** (q ** i)``; stays reduced and monic."""
        return RatFunc._raw(self.num.frobenius(i), self.den.frobenius(i))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, FqElem)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_text(self) -> str:
        if self.num.is_zero():
            return "0"
        if self.den.is_one():
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RatFunc({self.to_text()})"


def poly_powmod(a: Poly, e: int, m: Poly) -> Poly:
    """``a**e mod m`` by square-and-multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    result = Poly.one(a.field) % m
    base = a % m
    while e:
        if e & 1:
            result = (result * base) % m
        e >>= 1
        if e:
            base = (base * base) % m
    return result
