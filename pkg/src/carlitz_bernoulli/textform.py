"""Parsing of the canonical text forms.

Grammar (whitespace ignored)::

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor (["*"] factor)*
    factor := atom ["^" INT]
    atom   := INT | "T" | "t" | "u" | "(" expr ")"

``T`` is theta, ``t`` the second variable of A[t] and ``u`` the residue
generating F_q over F_p (only meaningful when e > 1).  A rational function
is ``(<expr>)/(<expr>)``, ``(<expr>)`` or a bare expression.
"""

from __future__ import annotations

import re

from .fq import FqElem, FqField
from .bivariate import BiPoly
from .poly import Poly, RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([Ttu])|(.))")

# A parsed value is a sparse polynomial {(T-exp, t-exp): code}.
Sparse = dict


class ParseError(ValueError):
    pass


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - regex always matches something
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok is None or tok.isspace():
            break
        if m.group(3) and tok not in "+-*^()":
            raise ParseError(f"unexpected character {tok!r} in {text!r}")
        out.append(tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, field: FqField, text: str):
        self.field = field
        self.text = text
        self.toks = _tokens(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'} in {self.text!r}")
        self.pos += 1
        return tok

    # sparse arithmetic
    def add(self, a: Sparse, b: Sparse) -> Sparse:
        out = dict(a)
        add = self.field._add
        for k, c in b.items():
            v = add[out.get(k, 0)][c]
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def neg(self, a: Sparse) -> Sparse:
        return {k: self.field._neg[c] for k, c in a.items()}

    def mul(self, a: Sparse, b: Sparse) -> Sparse:
        out: Sparse = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                out = self.add(out, {(i1 + i2, j1 + j2): self.field._mul[c1][c2]})
        return out

    def power(self, a: Sparse, n: int) -> Sparse:
        if len(a) == 1:
            ((i, j), c), = a.items()
            code = 1
            for _ in range(n):
                code = self.field._mul[code][c]
            return {(i * n, j * n): code} if code else {}
        out: Sparse = {(0, 0): 1}
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def parse(self) -> Sparse:
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self) -> Sparse:
        if self.peek() == "-":
            self.take()
            value = self.neg(self.term())
        else:
            value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = self.add(value, rhs if op == "+" else self.neg(rhs))
        return value

    def term(self) -> Sparse:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
            elif tok is None or not (tok.isdigit() or tok in "Ttu("):
                return value
            value = self.mul(value, self.factor())

    def factor(self) -> Sparse:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            base = self.power(base, int(tok))
        return base

    def atom(self) -> Sparse:
        tok = self.take()
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok.isdigit():
            code = int(tok) % self.field.p
            return {(0, 0): code} if code else {}
        if tok == "T":
            return {(1, 0): 1}
        if tok == "t":
            return {(0, 1): 1}
        if tok == "u":
            if self.field.e == 1:
                raise ParseError("symbol u only exists for extension fields")
            code = self.field._code([0, 1])
            return {(0, 0): code}
        raise ParseError(f"unexpected token {tok!r} in {self.text!r}")


def parse_sparse(field: FqField, text: str) -> Sparse:
    return _Parser(field, text).parse()


def parse_poly(field: FqField, text: str, var: str = "T") -> Poly:
    """Parse a univariate polynomial in ``var`` (``T`` or ``t``)."""
    sparse = parse_sparse(field, text)
    slot = 0 if var == "T" else 1
    if any(k[1 - slot] for k in sparse):
        raise ParseError(f"{text!r} is not univariate in {var}")
    if not sparse:
        return Poly.zero(field)
    deg = max(k[slot] for k in sparse)
    codes = [0] * (deg + 1)
    for k, c in sparse.items():
        codes[k[slot]] = c
    return Poly.from_codes(field, codes)


def _split_fraction(text: str) -> tuple[str, str | None]:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:i], text[i + 1:]
    return text, None


def parse_ratfunc(field: FqField, text: str) -> RatFunc:
    num_text, den_text = _split_fraction(text)
    num = parse_poly(field, num_text)
    if den_text is None:
        return RatFunc(num)
    return RatFunc(num, parse_poly(field, den_text))


def parse_bipoly(field: FqField, text: str) -> BiPoly:
    """Parse an element of F_q[T, t]."""
    out = BiPoly.zero(field)
    for (texp, tdeg), code in parse_sparse(field, text).items():
        out = out + BiPoly.monomial(field, texp, tdeg, FqElem(field, code))
    return out


def parse_fq(field: FqField, text: str) -> FqElem:
    sparse = parse_sparse(field, text)
    if any(k != (0, 0) for k in sparse):
        raise ParseError(f"{text!r} is not a field constant")
    return FqElem(field, sparse.get((0, 0), 0))


def parse_modulus(p: int, text: str) -> list[int]:
    """Coefficients (low degree first) of a polynomial over F_p written in ``x``."""
    from .fq import field_create

    prime = field_create(p, 1)
    return parse_poly(prime, text.replace("x", "T").replace("X", "T")).codes
