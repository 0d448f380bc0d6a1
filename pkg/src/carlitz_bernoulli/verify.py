"""Identity-verification suites run by ``carlitz-bernoulli verify``.

Every check compares two independently computed sides over a finite grid
and reports the number of cases, the number of skipped cases and the first
counterexample.  Grids and iteration orders are fixed, so the emitted
records are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterator

from .anderson_thakur import (
    ATDenominatorError,
    at_polynomials,
    coefficient_bound_ok,
    generating_identity_residual,
    index_data,
    j_tuples,
)
from .bernoulli import bc, bc_series_oracle, mpbcn_closed, mpbcn_recursion_check, mpbcn_series_oracle, mpbcn_special_ones
from .bivariate import BiPoly
from .carlitz import Index, carlitz_cache, carlitz_exp, carlitz_log, cmpl_series, log_floor
from .finite_zeta import (
    HypothesisViolation,
    NotInvertibleModPrime,
    PrimeModulus,
    enumerate_primes,
    fmzv_direct,
    fmzv_via_cmpl,
    fmzv_via_mpbcn,
    fmzv_via_mpbcn_ones,
    power_sum,
    reduce_mod,
)
from .fq import FqField
from .poly import Poly, RatFunc
from .series import TruncSeries, series_frob_pow
from .stirling import digit_sum, stirling_table


def compositions(max_depth: int, max_weight: int) -> list[Index]:
    """Indices of depth <= max_depth and weight <= max_weight, by weight then lexicographically."""
    out: list[Index] = []

    def extend(prefix: tuple[int, ...], remaining: int) -> None:
        if remaining == 0:
            out.append(Index(prefix))
            return
        if len(prefix) < max_depth:
            for a in range(1, remaining + 1):
                extend(prefix + (a,), remaining - a)

    for w in range(1, max_weight + 1):
        extend((), w)
    return out


def default_prime_degree(q: int) -> int:
    """Largest d with q^d <= 30 (4 for q = 2, 3 for q = 3, 2 for q = 4, 5)."""
    return max(1, log_floor(30, q))


@dataclass(frozen=True)
class Limits:
    max_n: int
    max_prime_deg: int
    max_depth: int = 3
    max_weight: int = 5

    @classmethod
    def for_field(cls, field: FqField, max_n: int | None = None, max_prime_deg: int | None = None) -> Limits:
        return cls(
            max_n=field.q ** 3 if max_n is None else max_n,
            max_prime_deg=default_prime_degree(field.q) if max_prime_deg is None else max_prime_deg,
        )


@dataclass
class CheckResult:
    suite: str
    check: str
    cases: int = 0
    skipped: int = 0
    failures: int = 0
    counterexample: dict | None = dc_field(default=None)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def expect(self, ok: bool, **witness) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = {k: _plain(v) for k, v in witness.items()}

    def record(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.check,
            "status": "pass" if self.passed else "fail",
            "cases": self.cases,
            "skipped": self.skipped,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }


def _plain(v):
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    if isinstance(v, tuple):
        return ",".join(str(x) for x in v)
    return str(v)


Check = Callable[[FqField, Limits, CheckResult], None]
SUITES: dict[str, list[tuple[str, Check]]] = {}


def _check(suite: str, name: str):
    def register(fn: Check) -> Check:
        SUITES.setdefault(suite, []).append((name, fn))
        return fn
    return register


def _all_j(field: FqField, limits: Limits) -> Iterator[tuple[Index, tuple[int, ...]]]:
    for s in compositions(limits.max_depth, limits.max_weight):
        for j in j_tuples(index_data(field, s)):
            yield s, j


# ---- fq -------------------------------------------------------------------

@_check("fq", "generator-order")
def _generator(field, limits, res):
    g = field.generator()
    res.expect(field.order(g.code) == field.q - 1, generator=g)


@_check("fq", "inverses")
def _inverses(field, limits, res):
    for a in field.elements():
        if a:
            res.expect(a * a.inverse() == field.one, a=a)


@_check("fq", "frobenius-additive")
def _frob(field, limits, res):
    for a in field.elements():
        for b in field.elements():
            res.expect((a + b) ** field.p == a ** field.p + b ** field.p, a=a, b=b)
        res.expect(a ** field.q == a, a=a)


# ---- carlitz --------------------------------------------------------------

def _small_levels(field: FqField, limits: Limits) -> int:
    return max(1, log_floor(max(limits.max_n, field.q) + 1, field.q))


@_check("carlitz", "base-values")
def _base(field, limits, res):
    cache = carlitz_cache(field)
    res.expect(cache.D(0).is_one(), D0=cache.D(0))
    res.expect(cache.L(0).is_one(), L0=cache.L(0))


@_check("carlitz", "factorial-at-q^j-1")
def _factorial_qj(field, limits, res):
    cache = carlitz_cache(field)
    for j in range(_small_levels(field, limits) + 1):
        sign = -1 if j % 2 else 1
        res.expect(RatFunc(cache.factorial(field.q ** j - 1)) == RatFunc(cache.D(j) * sign, cache.L(j)), j=j)


@_check("carlitz", "exp-log-leading-terms")
def _exp_log(field, limits, res):
    cache = carlitz_cache(field)
    q = field.q
    res.expect(carlitz_exp(field, q)[q] == RatFunc(Poly.one(field), cache.D(1)), term="e_C z^q")
    res.expect(carlitz_log(field, q)[q] == RatFunc(Poly.one(field), cache.L(1)), term="log_C z^q")


@_check("carlitz", "log-of-exp")
def _log_exp(field, limits, res):
    order = field.q ** 2 - 1
    exp_series = carlitz_exp(field, order)
    composed = TruncSeries.zero(field, order)
    cache = carlitz_cache(field)
    i = 0
    while field.q ** i <= order:
        composed = composed + series_frob_pow(exp_series, i).scale(RatFunc(Poly.one(field), cache.L(i)))
        i += 1
    res.expect(composed == TruncSeries.monomial(field, 1, order), order=order)


@_check("carlitz", "polylog-depth-one-at-one")
def _li_one(field, limits, res):
    order = field.q ** 2
    li = cmpl_series(field, (1,), (Poly.one(field),), order)
    res.expect(li == TruncSeries.monomial(field, 1, order), order=order)


# ---- stirling -------------------------------------------------------------

@_check("stirling", "basic-values")
def _st_basic(field, limits, res):
    table = stirling_table(field)
    n_max = limits.max_n
    for n in range(n_max + 1):
        res.expect(table.value(n, n) == RatFunc.one(field), n=n, m=n)
        if n >= 1:
            res.expect(not table.value(n, 0), n=n, m=0)
        for m in range(n + 1, n_max + 1):
            res.expect(not table.value(n, m), n=n, m=m)


@_check("stirling", "digit-sum-vanishing")
def _st_lambda(field, limits, res):
    table = stirling_table(field)
    q = field.q
    n_max = limits.max_n
    for m in range(n_max + 1):
        for n in range(m, n_max + 1):
            if digit_sum(n, q) > digit_sum(m, q):
                res.expect(not table.value(n, m), n=n, m=m)


@_check("stirling", "q-power-dichotomy")
def _st_kronecker(field, limits, res):
    table = stirling_table(field)
    q = field.q
    top = log_floor(limits.max_n + 1, q)
    for m in range(top + 1):
        for i in range(m + 1):
            value = table.value(q ** m - 1, q ** i - 1)
            expected = RatFunc.one(field) if m == i else RatFunc.zero(field)
            res.expect(value == expected, m=m, i=i, value=value)


# ---- bc-routes ------------------------------------------------------------

@_check("bc-routes", "stirling-sum-vs-generating-series")
def _bc_routes(field, limits, res):
    oracle = bc_series_oracle(field, limits.max_n)
    for n in range(limits.max_n + 1):
        value = bc(field, n)
        res.expect(value == oracle[n], n=n, closed=value, series=oracle[n])


@_check("bc-routes", "q-power-values")
def _bc_qpow(field, limits, res):
    cache = carlitz_cache(field)
    for i in range(log_floor(limits.max_n + 1, field.q) + 1):
        n = field.q ** i - 1
        res.expect(bc(field, n) == RatFunc(cache.factorial(n), cache.L(i)), i=i)


@_check("bc-routes", "depth-one-mpbcn-is-bc")
def _bc_depth_one(field, limits, res):
    for n in range(limits.max_n + 1):
        res.expect(mpbcn_closed(field, (1,), (0,), n) == bc(field, n), n=n)


@_check("bc-routes", "q-power-column-sum")
def _bc_column_sum(field, limits, res):
    table = stirling_table(field)
    q = field.q
    for n in range(limits.max_n + 1):
        total = RatFunc.zero(field)
        for i in range(log_floor(n + 1, q) + 1):
            total = total + table.value(n, q ** i - 1) * bc(field, q ** i - 1)
        res.expect(total == bc(field, n), n=n)


# ---- mpbcn-routes ---------------------------------------------------------

@_check("mpbcn-routes", "closed-form-vs-generating-series")
def _mpbcn_routes(field, limits, res):
    for s, j in _all_j(field, limits):
        oracle = mpbcn_series_oracle(field, s, j, limits.max_n)
        for n in range(limits.max_n + 1):
            res.expect(mpbcn_closed(field, s, j, n) == oracle[n], s=s, j=j, n=n)


# ---- vanishing ------------------------------------------------------------

@_check("vanishing", "bc")
def _van_bc(field, limits, res):
    for n in range(limits.max_n + 1):
        if n % (field.q - 1):
            res.expect(not bc(field, n), n=n)


@_check("vanishing", "mpbcn")
def _van_mpbcn(field, limits, res):
    for s, j in _all_j(field, limits):
        for n in range(limits.max_n + 1):
            if n % (field.q - 1):
                res.expect(not mpbcn_closed(field, s, j, n), s=s, j=j, n=n)


# ---- special-ones ---------------------------------------------------------

@_check("special-ones", "all-ones-index")
def _special(field, limits, res):
    q = field.q
    for r in range(1, limits.max_depth + 1):
        s, j = (1,) * r, (0,) * r
        for n in range(q ** (r - 1) - 1, limits.max_n + 1):
            res.expect(mpbcn_special_ones(field, r, n) == mpbcn_closed(field, s, j, n), r=r, n=n)


# ---- recursion ------------------------------------------------------------

@_check("recursion", "q-power-recursion")
def _recursion(field, limits, res):
    top = log_floor(limits.max_n + 1, field.q)
    for s in compositions(3, 4):
        if s.depth < 2:
            continue
        for j in j_tuples(index_data(field, s)):
            for m in range(s.depth - 1, top + 1):
                w = mpbcn_recursion_check(field, s, j, m)
                res.expect(w.holds, s=s, j=j, m=m)


# ---- anderson-thakur ------------------------------------------------------

@_check("anderson-thakur", "denominators-clear")
def _at_clear(field, limits, res):
    try:
        at_polynomials(field, field.q ** 2)
        res.expect(True)
    except ATDenominatorError as exc:
        res.expect(False, error=str(exc))


@_check("anderson-thakur", "small-n-are-one")
def _at_small(field, limits, res):
    series = at_polynomials(field, field.q - 1)
    for n in range(field.q):
        res.expect(series[n] == BiPoly.one(field), n=n, value=series[n])


@_check("anderson-thakur", "generating-identity-round-trip")
def _at_roundtrip(field, limits, res):
    failures = generating_identity_residual(at_polynomials(field, field.q ** 2))
    for n in range(field.q ** 2 + 1):
        res.expect(n not in failures, n=n)


@_check("anderson-thakur", "coefficient-degree-bound")
def _at_bound(field, limits, res):
    series = at_polynomials(field, 2 * field.q - 1)
    for s in range(1, 2 * field.q + 1):
        for j, u in enumerate(series[s - 1].t_coefficients()):
            res.expect(coefficient_bound_ok(field, u, s), s=s, j=j, u=u)


@_check("anderson-thakur", "small-entries-trivial-data")
def _at_trivial(field, limits, res):
    for r in range(1, limits.max_depth + 1):
        for s in ((1,) * r, (field.q,) * r):
            data = index_data(field, s)
            res.expect(list(j_tuples(data)) == [(0,) * r], s=s)
            res.expect(all(ui == (Poly.one(field),) for ui in data.u), s=s)


# ---- fmzv -----------------------------------------------------------------

def _primes(field: FqField, limits: Limits) -> Iterator[PrimeModulus]:
    for d in range(1, limits.max_prime_deg + 1):
        for p in enumerate_primes(field, d):
            yield PrimeModulus(p)


@_check("fmzv", "three-routes")
def _fmzv_triple(field, limits, res):
    for prime in _primes(field, limits):
        for s in compositions(limits.max_depth, limits.max_weight):
            try:
                b = fmzv_via_cmpl(s, prime)
                c = fmzv_via_mpbcn(s, prime)
            except HypothesisViolation:
                res.skipped += 1
                continue
            a = fmzv_direct(s, prime)
            res.expect(a == b == c, s=s, prime=prime, direct=a, cmpl=b, mpbcn=c)


@_check("fmzv", "leading-ones")
def _fmzv_ones(field, limits, res):
    for prime in _primes(field, limits):
        for s in compositions(limits.max_depth, limits.max_weight):
            for dd in (1, 2):
                try:
                    value = fmzv_via_mpbcn_ones(dd, s, prime)
                except HypothesisViolation:
                    res.skipped += 1
                    continue
                full = (1,) * dd + tuple(s)
                res.expect(value == fmzv_direct(full, prime), s=full, prime=prime)


@_check("fmzv", "degree-block-reciprocal-sum")
def _fmzv_block(field, limits, res):
    cache = carlitz_cache(field)
    for prime in _primes(field, limits):
        for i in range(prime.degree):
            res.expect(power_sum(prime, i, 1) == prime(cache.L(i)).inverse(), prime=prime, i=i)


@_check("fmzv", "depth-one-weight-one")
def _fmzv_s1(field, limits, res):
    cache = carlitz_cache(field)
    for prime in _primes(field, limits):
        expected = prime(Poly.zero(field))
        for i in range(prime.degree):
            expected = expected + prime(cache.L(i)).inverse()
        res.expect(fmzv_via_mpbcn((1,), prime) == expected, prime=prime)


@_check("fmzv", "denominators-invertible")
def _fmzv_den(field, limits, res):
    cache = carlitz_cache(field)
    for prime in _primes(field, limits):
        for i in range(prime.degree):
            for name, value in (("L", RatFunc(Poly.one(field), cache.L(i))),
                                ("D", RatFunc(Poly.one(field), cache.D(i))),
                                ("BC", bc(field, field.q ** i - 1))):
                try:
                    reduce_mod(value, prime)
                    res.expect(True)
                except NotInvertibleModPrime:
                    res.expect(False, prime=prime, kind=name, i=i)


SUITE_NAMES = list(SUITES)


def run_suite(name: str, field: FqField, limits: Limits) -> Iterator[CheckResult]:
    """Run one suite (or ``all``), yielding a result per check."""
    if name == "all":
        names = SUITE_NAMES
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITE_NAMES)}")
    for suite in names:
        for check, fn in SUITES[suite]:
            res = CheckResult(suite, check)
            fn(field, limits, res)
            yield res
