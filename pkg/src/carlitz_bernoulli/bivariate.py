"""Polynomials in A[t] = F_q[theta, t] and fractions of them.

A :class:`BiPoly` is stored as rows indexed by theta-degree, each row a
univariate :class:`Poly` in ``t``.  The coefficient of theta^i t^j is
``rows[i][j]``.
"""

from __future__ import annotations

from typing import Sequence

from .fq import FqElem, FqField
from .poly import Poly, poly_gcd


class BiPoly:
    __slots__ = ("field", "rows")

    def __init__(self, field: FqField, rows: Sequence[Poly] = ()):
        rows = list(rows)
        while rows and rows[-1].is_zero():
            rows.pop()
        self.field = field
        self.rows = rows

    @classmethod
    def zero(cls, field: FqField) -> BiPoly:
        return cls(field, [])

    @classmethod
    def one(cls, field: FqField) -> BiPoly:
        return cls(field, [Poly.one(field)])

    @classmethod
    def from_t(cls, p: Poly) -> BiPoly:
        """Embed a polynomial in t."""
        return cls(p.field, [p])

    @classmethod
    def from_theta(cls, p: Poly) -> BiPoly:
        """Embed a polynomial in theta."""
        return cls(p.field, [Poly(p.field, [c]) for c in p.coeffs])

    @classmethod
    def monomial(cls, field: FqField, theta_deg: int, t_deg: int, coeff: FqElem | int = 1) -> BiPoly:
        zero = Poly.zero(field)
        return cls(field, [zero] * theta_deg + [Poly.monomial(field, t_deg, coeff)])

    # -- inspection --
    def is_zero(self) -> bool:
        return not self.rows

    def __bool__(self) -> bool:
        return bool(self.rows)

    @property
    def theta_degree(self) -> int:
        return len(self.rows) - 1

    @property
    def t_degree(self) -> int:
        return max((int(r.degree) for r in self.rows if r), default=-1)

    def t_coefficient(self, j: int) -> Poly:
        """Coefficient of t^j as a polynomial in theta."""
        return Poly(self.field, [r[j] for r in self.rows])

    def t_coefficients(self) -> list[Poly]:
        return [self.t_coefficient(j) for j in range(self.t_degree + 1)]

    def terms(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, r in enumerate(self.rows):
            for j, c in enumerate(r.codes):
                if c:
                    out[(i, j)] = c
        return out

    # -- arithmetic --
    def _check(self, other: BiPoly) -> None:
        if other.field is not self.field:
            self.field.check(other.field)

    def __add__(self, other: BiPoly) -> BiPoly:
        self._check(other)
        a, b = self.rows, other.rows
        if len(a) < len(b):
            a, b = b, a
        return BiPoly(self.field, [x + y for x, y in zip(a, b)] + a[len(b):])

    def __neg__(self) -> BiPoly:
        return BiPoly(self.field, [-r for r in self.rows])

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return self.mul_t(other)
        if isinstance(other, (int, FqElem)):
            return BiPoly(self.field, [r * other for r in self.rows])
        self._check(other)
        if not self.rows or not other.rows:
            return BiPoly.zero(self.field)
        out = [Poly.zero(self.field)] * (len(self.rows) + len(other.rows) - 1)
        for i, a in enumerate(self.rows):
            if not a:
                continue
            for j, b in enumerate(other.rows):
                if b:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        result = BiPoly.one(self.field)
        for _ in range(n):
            result = result * self
        return result

    def mul_t(self, p: Poly) -> BiPoly:
        """Multiply by a polynomial in t alone."""
        return BiPoly(self.field, [r * p for r in self.rows])

    def divmod_t(self, p: Poly) -> tuple[BiPoly, BiPoly]:
        """Divide every row by a polynomial in t alone."""
        quots, rems = [], []
        for r in self.rows:
            qr, rr = divmod(r, p)
            quots.append(qr)
            rems.append(rr)
        return BiPoly(self.field, quots), BiPoly(self.field, rems)

    def subs_t_theta(self) -> Poly:
        """Evaluate at t = theta."""
        total = Poly.zero(self.field)
        theta = Poly.theta(self.field)
        for r in reversed(self.rows):
            total = total * theta + r
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms().items())))

    def to_text(self) -> str:
        """Terms by decreasing t-degree, then decreasing theta-degree."""
        terms = self.terms()
        parts = []
        for (i, j) in sorted(terms, key=lambda k: (-k[1], -k[0])):
            c = terms[(i, j)]
            ctext = self.field.element_text(c)
            monos = []
            if i:
                monos.append("T" if i == 1 else f"T^{i}")
            if j:
                monos.append("t" if j == 1 else f"t^{j}")
            mono = "*".join(monos)
            if not mono:
                parts.append(ctext)
            elif c == 1:
                parts.append(mono)
            elif "+" in ctext or "*" in ctext:
                parts.append(f"({ctext})*{mono}")
            else:
                parts.append(f"{ctext}*{mono}")
        return "+".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()})"


class BiRat:
    """A fraction of bivariate polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None):
        if den is None:
            den = BiPoly.one(num.field)
        if den.is_zero():
            raise ZeroDivisionError("BiRat with zero denominator")
        self.num, self.den = _reduce_content(num, den)

    @property
    def field(self) -> FqField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: BiRat) -> BiRat:
        if self.den == other.den:
            return BiRat(self.num + other.num, self.den)
        return BiRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> BiRat:
        return BiRat(-self.num, self.den)

    def __sub__(self, other: BiRat) -> BiRat:
        return self + (-other)

    def __mul__(self, other: BiRat) -> BiRat:
        return BiRat(self.num * other.num, self.den * other.den)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiRat):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"BiRat(({self.num})/({self.den}))"


def _reduce_content(num: BiPoly, den: BiPoly) -> tuple[BiPoly, BiPoly]:
    """Cancel common factors when the denominator lies in F_q[t]."""
    if num.is_zero():
        return num, BiPoly.one(num.field)
    if len(den.rows) != 1:
        return num, den
    g = den.rows[0]
    for r in num.rows:
        if r:
            g = poly_gcd(g, r)
            if g.degree == 0:
                break
    lead = den.rows[0].leading.inverse()
    if g.degree == 0:
        return num * lead, BiPoly(num.field, [den.rows[0] * lead])
    quot, _ = num.divmod_t(g)
    dq = den.rows[0] // g
    return quot * lead, BiPoly(num.field, [dq * lead])
