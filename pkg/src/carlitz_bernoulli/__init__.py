"""Exact arithmetic for Bernoulli-Carlitz numbers and finite multiple zeta values over F_q[theta]."""

from .anderson_thakur import IndexData, a_j_at_theta, at_polynomials, index_data, j_tuples
from .bernoulli import (
    bc,
    bc_series_oracle,
    mpbcn_closed,
    mpbcn_recursion_check,
    mpbcn_series_oracle,
    mpbcn_special_ones,
)
from .bivariate import BiPoly, BiRat
from .carlitz import (
    Index,
    carlitz_exp,
    carlitz_factorial,
    carlitz_gamma,
    carlitz_log,
    cmpl_series,
    compute_D,
    compute_L,
)
from .finite_zeta import (
    HypothesisViolation,
    NotInvertibleModPrime,
    PrimeModulus,
    Residue,
    enumerate_primes,
    fcmpl_direct,
    fmzv_direct,
    fmzv_via_cmpl,
    fmzv_via_mpbcn,
    fmzv_via_mpbcn_ones,
    irreducible_test,
    reduce_mod,
)
from .fq import FqElem, FqField, field_create, fq_generator, fq_inv
from .poly import Poly, RatFunc, poly_divmod, poly_gcd, poly_xgcd
from .series import TruncationError, TruncSeries, series_frob_pow, series_inv, series_mul
from .stirling import digit_sum, stirling_carlitz
from .textform import ParseError, parse_bipoly, parse_poly, parse_ratfunc

__all__ = [
    "BiPoly", "BiRat", "FqElem", "FqField", "HypothesisViolation", "Index", "IndexData",
    "NotInvertibleModPrime", "ParseError", "Poly", "PrimeModulus", "RatFunc", "Residue",
    "TruncSeries", "TruncationError",
    "a_j_at_theta", "at_polynomials", "bc", "bc_series_oracle", "carlitz_exp",
    "carlitz_factorial", "carlitz_gamma", "carlitz_log", "cmpl_series", "compute_D",
    "compute_L", "digit_sum", "enumerate_primes", "fcmpl_direct", "field_create",
    "fmzv_direct", "fmzv_via_cmpl", "fmzv_via_mpbcn", "fmzv_via_mpbcn_ones", "fq_generator",
    "fq_inv", "index_data", "irreducible_test", "j_tuples", "mpbcn_closed",
    "mpbcn_recursion_check", "mpbcn_series_oracle", "mpbcn_special_ones", "parse_bipoly",
    "parse_poly", "parse_ratfunc", "poly_divmod", "poly_gcd", "poly_xgcd", "reduce_mod",
    "series_frob_pow", "series_inv", "series_mul", "stirling_carlitz",
]
