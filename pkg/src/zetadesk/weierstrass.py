"""Numerical check of a genus-1 product factorization of e^x - e^a
over its zero lattice a + 2 n pi i.

The convergence factor attached to each linear term is
e^{sigma x/(a + 2 n pi i)} with a sign choice sigma = +1 or -1; the two
choices look equally plausible on the page, but only one of them is the
genus-1 form that converges to e^x - e^a. Both are evaluated and
measured against direct evaluation; nothing here privileges either sign
ahead of the measurement."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

EXPONENT_SIGNS = ("minus", "plus")

# cexp overflows near 709.78; stay clear so intermediate products are
# finite too
_EXP_ARG_LIMIT = 700.0


def _check_not_degenerate(a: complex) -> complex:
    a = complex(a)
    k = round(a.imag / TWO_PI)
    if abs(a.real) < 1e-8 and abs(a.imag - TWO_PI * k) < 1e-8:
        raise ValueError("a within 1e-8 of 2 pi i k makes 1 - e^a "
                         "degenerate; the factorization needs a "
                         "nonvanishing constant term")
    return a


@dataclass(frozen=True, eq=False)
class ProductEvaluation:
    """Truncated product vs direct evaluation of e^x - e^a.

    relative_error is |product - direct| / |direct|; when the direct
    value is exactly zero (x at a lattice zero) the absolute gap is
    reported in the same field."""

    x: complex
    a: complex
    n_terms: int
    exponent_sign: str
    product_value: complex
    direct_value: complex
    relative_error: float


def exp_difference_product(x: complex, a: complex, n_terms: int,
                           exponent_sign: str = "plus") -> ProductEvaluation:
    if exponent_sign not in EXPONENT_SIGNS:
        raise ValueError(f"exponent_sign must be one of {EXPONENT_SIGNS}")
    if n_terms < 1:
        raise ValueError("need n_terms >= 1")
    x = complex(x)
    a = _check_not_degenerate(a)
    if abs(x.real) > _EXP_ARG_LIMIT or abs(a.real) > _EXP_ARG_LIMIT:
        raise ValueError("direct evaluation of the exponentials would "
                         "overflow binary64")
    ea = cmath.exp(a)
    direct = cmath.exp(x) - ea
    sign = 1.0 if exponent_sign == "plus" else -1.0

    n = np.arange(1, n_terms + 1, dtype=np.float64)
    shift = 2j * math.pi * n
    z_pos = a + shift
    z_neg = a - shift
    # polynomial parts multiplied pairwise (n, -n); factors approach 1
    # like 1/n^2 so the running product stays well scaled
    pair_factors = (1.0 - x / z_pos) * (1.0 - x / z_neg)
    poly = complex(np.prod(pair_factors)) * (1.0 - x / a)
    # convergence-factor exponents summed in the same symmetric pairing:
    # 1/z_pos + 1/z_neg collapses to 2a/(a^2 + 4 pi^2 n^2) exactly
    pair_inverse = 2.0 * a / (a * a + (TWO_PI * n) ** 2)
    inv_sum = complex(math.fsum(pair_inverse.real),
                      math.fsum(pair_inverse.imag)) + 1.0 / a
    exponent = sign * x * inv_sum - x / (ea - 1.0)
    if abs(exponent.real) > _EXP_ARG_LIMIT:
        raise ValueError("convergence-factor exponent would overflow; "
                         "reduce |x| or move a away from 2 pi i k")
    product = (1.0 - ea) * cmath.exp(exponent) * poly
    if direct != 0:
        rel = abs(product - direct) / abs(direct)
    else:
        rel = abs(product - direct)
    return ProductEvaluation(x=x, a=a, n_terms=int(n_terms),
                             exponent_sign=exponent_sign,
                             product_value=product, direct_value=direct,
                             relative_error=rel)


@dataclass(frozen=True, eq=False)
class SignComparison:
    """Both exponent-sign evaluations side by side; converging_sign
    names the one closer to the direct value at this truncation."""

    minus: ProductEvaluation
    plus: ProductEvaluation

    @property
    def converging_sign(self) -> str:
        if self.plus.relative_error <= self.minus.relative_error:
            return "plus"
        return "minus"


def compare_exponent_signs(x: complex, a: complex,
                           n_terms: int) -> SignComparison:
    return SignComparison(
        minus=exp_difference_product(x, a, n_terms, "minus"),
        plus=exp_difference_product(x, a, n_terms, "plus"))


def zero_set_check(a: complex, count: int, tolerance: float = 1e-12) -> bool:
    """e^{a + 2 n pi i} agrees with e^a to the tolerance for all
    |n| <= count: the lattice points really are zeros of e^x - e^a."""
    if count < 1:
        raise ValueError("need count >= 1")
    a = complex(a)
    base = cmath.exp(a)
    scale = abs(base)
    for n in range(-count, count + 1):
        shifted = cmath.exp(complex(a.real, a.imag + TWO_PI * n))
        if abs(shifted - base) > tolerance * scale:
            return False
    return True


__all__ = ["EXPONENT_SIGNS", "ProductEvaluation", "exp_difference_product",
           "SignComparison", "compare_exponent_signs", "zero_set_check"]
