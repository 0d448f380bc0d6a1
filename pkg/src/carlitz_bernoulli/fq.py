"""Arithmetic in the finite field F_q, q = p^e.

Elements are stored as integer codes: the coefficient vector
``(c_0, ..., c_{e-1})`` of the residue ``c_0 + c_1 u + ... + c_{e-1} u^{e-1}``
(``u`` the residue of ``x`` modulo the field modulus) packed as
``sum(c_k * p**k)``.  The natural order on codes is the deterministic
coefficient-vector ordering used for modulus and generator selection.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

DEFAULT_MAX_Q = 64


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- dense polynomials over F_p as coefficient lists (low degree first) ---

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    r = [c % p for c in a]
    _fp_trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db:
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - db
        for k, bk in enumerate(b):
            r[shift + k] = (r[shift + k] - c * bk) % p
        _fp_trim(r)
    return r


def _monic_polys_fp(p: int, d: int) -> Iterable[list[int]]:
    """Monic degree-d polynomials over F_p in lexicographic order of (c_{d-1}, ..., c_0)."""
    for high_first in itertools.product(range(p), repeat=d):
        yield list(reversed(high_first)) + [1]


def is_irreducible_fp(f: Sequence[int], p: int) -> bool:
    """Irreducibility over F_p by trial division (only meant for tiny degrees)."""
    f = _fp_trim([c % p for c in f])
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in _monic_polys_fp(p, k):
            if not _fp_mod(f, g, p):
                return False
    return True


def smallest_irreducible_fp(p: int, e: int) -> tuple[int, ...]:
    for f in _monic_polys_fp(p, e):
        if is_irreducible_fp(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FqField:
    """The finite field F_q, q = p^e, realised as F_p[x]/(modulus)."""

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None, *,
                 max_q: int = DEFAULT_MAX_Q):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p ** e
        if q > max_q:
            raise ValueError(f"q = {q} exceeds the configured limit {max_q}")
        if modulus is None:
            modulus = smallest_irreducible_fp(p, e) if e > 1 else (0, 1)
        else:
            modulus = tuple(_fp_trim([c % p for c in modulus]))
            if len(modulus) - 1 != e:
                raise ValueError(f"modulus has degree {len(modulus) - 1}, expected {e}")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not is_irreducible_fp(modulus, p):
                raise ValueError("modulus is reducible over F_p")
        if e == 1:
            modulus = (0, 1)
        self.p = p
        self.e = e
        self.q = q
        self.modulus = tuple(modulus)
        self._build_tables()
        self._backend = None

    # tables over integer codes
    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        vecs = [self._vec(c) for c in range(q)]
        self._add = [[self._code([(a + b) % p for a, b in zip(va, vb)]) for vb in vecs] for va in vecs]
        self._neg = [self._code([(-a) % p for a in va]) for va in vecs]
        if e == 1:
            self._mul = [[a * b % p for b in range(q)] for a in range(q)]
        else:
            mul = []
            for va in vecs:
                row = []
                for vb in vecs:
                    prod = [0] * (2 * e - 1)
                    for i, a in enumerate(va):
                        if a:
                            for j, b in enumerate(vb):
                                prod[i + j] += a * b
                    row.append(self._code(_fp_mod(prod, self.modulus, p)))
                mul.append(row)
            self._mul = mul
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _vec(self, code: int) -> list[int]:
        out = []
        for _ in range(self.e):
            code, c = divmod(code, self.p)
            out.append(c)
        return out

    def _code(self, vec: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(vec)[: self.e] + [0] * (self.e - len(vec))):
            code = code * self.p + c
        return code

    # public helpers
    def __call__(self, value: int | Sequence[int] | FqElem) -> FqElem:
        if isinstance(value, FqElem):
            self.check(value.field)
            return value
        if isinstance(value, int):
            return FqElem(self, value % self.p)
        return FqElem(self, self._code([c % self.p for c in value]))

    @property
    def zero(self) -> FqElem:
        return FqElem(self, 0)

    @property
    def one(self) -> FqElem:
        return FqElem(self, 1)

    def elements(self) -> list[FqElem]:
        return [FqElem(self, c) for c in range(self.q)]

    def check(self, other: FqField) -> None:
        if other is not self and other != self:
            raise FieldMismatchError(f"cannot mix elements of {self} and {other}")

    def element_text(self, code: int) -> str:
        if self.e == 1:
            return str(code)
        terms = []
        for k, c in reversed(list(enumerate(self._vec(code)))):
            if not c:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def order(self, code: int) -> int:
        if code == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        k, x = 1, code
        while x != 1:
            x = self._mul[x][code]
            k += 1
        return k

    def generator(self) -> FqElem:
        return fq_generator(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FqField):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"FqField(F_{self.q})"
        return f"FqField(F_{self.q}, modulus={list(self.modulus)})"


class FqElem:
    """An element of F_q, identified by its integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: FqField, code: int):
        if not 0 <= code < field.q:
            raise ValueError(f"code {code} out of range for {field}")
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> list[int]:
        return self.field._vec(self.code)

    def _other(self, other: object) -> int:
        if isinstance(other, FqElem):
            self.field.check(other.field)
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FqElem(self.field, self.field._add[self.code][b])

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, self.field._neg[self.code])

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FqElem(self.field, self.field._add[self.code][self.field._neg[b]])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FqElem(self.field, self.field._mul[self.code][b])

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return self * FqElem(self.field, b).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = 1, self.code
        mul = self.field._mul
        while n:
            if n & 1:
                result = mul[result][base]
            base = mul[base][base]
            n >>= 1
        return FqElem(self.field, result)

    def inverse(self) -> FqElem:
        if self.code == 0:
            raise ZeroDivisionError("zero is not invertible in F_q")
        return FqElem(self.field, self.field._inv[self.code])

    def frobenius(self) -> FqElem:
        return self ** self.field.p

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FqElem):
            return self.code == other.code and self.field == other.field
        if isinstance(other, int):
            return self.code == other % self.field.p and (self.code < self.field.p)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __lt__(self, other: FqElem) -> bool:
        return self.code < other.code

    def __str__(self) -> str:
        return self.field.element_text(self.code)

    def __repr__(self) -> str:
        return f"FqElem({self})"


@lru_cache(maxsize=None)
def _field_cached(p: int, e: int, modulus: tuple[int, ...] | None, max_q: int) -> FqField:
    return FqField(p, e, modulus, max_q=max_q)


def field_create(p: int, e: int = 1, modulus: Sequence[int] | None = None, *,
                 max_q: int = DEFAULT_MAX_Q) -> FqField:
    """Return F_{p^e}; equal arguments give the identical (shared) field object.

    ``modulus`` is a coefficient list over F_p, lowest degree first.  When it is
    omitted and ``e > 1`` the lexicographically smallest monic irreducible of
    degree ``e`` is used.
    """
    key = None if modulus is None else tuple(c % p if p else c for c in modulus)
    if e == 1 and key is not None:
        FqField(p, e, key, max_q=max_q)  # validates the given modulus
        key = None
    if key is None and e > 1 and is_prime(p) and p ** e <= max_q:
        key = smallest_irreducible_fp(p, e)
    return _field_cached(p, e, key, max_q)


def fq_inv(a: FqElem) -> FqElem:
    return a.inverse()


def fq_generator(field: FqField) -> FqElem:
    """Smallest element (by code) of multiplicative order q - 1."""
    for code in range(1, field.q):
        if field.order(code) == field.q - 1:
            return FqElem(field, code)
    raise AssertionError("F_q^x has no generator")  # pragma: no cover
