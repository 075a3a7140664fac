"""Dirichlet-series machinery over tabulated coefficients.

Provides:
  - partial sums of sum lambda(n) n^{-s} with n^{-s} = exp(-s log n),
    accumulated in ascending order;
  - summation by parts over a block, with the boundary terms and the
    remainder kept separate and one mean-value exponent recorded per
    difference term;
  - prefix ratio scans r(n) = P(n)/n^s on a geometric grid;
  - exact divisor-sum convolution of two coefficient streams;
  - empirical convergence-abscissa probes (least-squares slope of the
    prefix-sum envelope against log n).

Coefficient streams are flat float arrays, entry 0 unused, so sources
can be mixed freely (Mobius, unit, corrected divisor counts, the
1 - prime-power-log weight, or anything custom).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import ArithTable, MertensPrefix, mangoldt_weight
from .constants import euler_constant
from .reports import ScanReport, build_scan_report, geometric_grid

STREAM_SOURCES = ("mobius", "divisor_corrected", "one_minus_g", "unit", "custom")


@dataclass(frozen=True, eq=False)
class CoefficientStream:
    """Tabulated Dirichlet coefficients lambda(1..limit); values[0] unused."""

    name: str
    limit: int
    values: np.ndarray
    source: str

    def __post_init__(self):
        if self.source not in STREAM_SOURCES:
            raise ValueError(f"unknown stream source {self.source!r}")
        if len(self.values) != self.limit + 1:
            raise ValueError("stream length disagrees with its limit")


def _finish(values: np.ndarray, name: str, limit: int, source: str) -> CoefficientStream:
    values.setflags(write=False)
    return CoefficientStream(name=name, limit=limit, values=values, source=source)


def mobius_stream(table: ArithTable, limit: int | None = None) -> CoefficientStream:
    n = _stream_limit(table, limit)
    values = np.zeros(n + 1, dtype=np.float64)
    values[1:] = table.mu[1 : n + 1]
    return _finish(values, "mobius", n, "mobius")


def unit_stream(limit: int) -> CoefficientStream:
    if limit < 1:
        raise ValueError("stream limit must be at least 1")
    values = np.ones(limit + 1, dtype=np.float64)
    values[0] = 0.0
    return _finish(values, "unit", limit, "unit")


def divisor_corrected_stream(table: ArithTable, limit: int | None = None) -> CoefficientStream:
    """lambda(n) = d(n) - log n - 2C."""
    n = _stream_limit(table, limit)
    c2 = 2.0 * euler_constant()
    values = np.zeros(n + 1, dtype=np.float64)
    idx = np.arange(1, n + 1, dtype=np.float64)
    values[1:] = table.divisor_count[1 : n + 1] - np.log(idx) - c2
    return _finish(values, "divisor_corrected", n, "divisor_corrected")


def one_minus_g_stream(table: ArithTable, limit: int | None = None) -> CoefficientStream:
    """lambda(n) = 1 - w(n), w the prime-power log weight with 2C head.

    So lambda(1) = 1 - 2C, lambda(p^k) = 1 - log p, lambda(n) = 1
    elsewhere. This is the Mobius convolution image of the corrected
    divisor stream (checked in tests and the CLI).
    """
    n = _stream_limit(table, limit)
    c = euler_constant()
    values = np.ones(n + 1, dtype=np.float64)
    values[0] = 0.0
    values[1] = 1.0 - 2.0 * c
    for p in table.primes:
        p = int(p)
        if p > n:
            break
        logp = math.log(p)
        pk = p
        while pk <= n:
            values[pk] = 1.0 - logp
            pk *= p
    return _finish(values, "one_minus_g", n, "one_minus_g")


def custom_stream(name: str, values) -> CoefficientStream:
    arr = np.asarray(values, dtype=np.float64).copy()
    if arr.ndim != 1 or len(arr) < 2:
        raise ValueError("custom stream needs a flat array with entry 0 padding")
    arr[0] = 0.0
    return _finish(arr, name, len(arr) - 1, "custom")


def _stream_limit(table: ArithTable, limit: int | None) -> int:
    n = table.limit if limit is None else limit
    if n < 1 or n > table.limit:
        raise ValueError(f"stream limit {n} outside table range")
    return n


def partial_sum(coeffs: CoefficientStream, s: complex, upto: int) -> complex:
    """sum_{n<=upto} lambda(n) exp(-s log n), ascending order."""
    if upto < 1 or upto > coeffs.limit:
        raise ValueError(f"partial sum bound {upto} outside stream range")
    n = np.arange(1, upto + 1, dtype=np.float64)
    terms = coeffs.values[1 : upto + 1] * np.exp(-complex(s) * np.log(n))
    return complex(np.cumsum(terms)[-1])


def mean_value_theta(n: int, s: float) -> float:
    """The exponent theta in 1/n^s - 1/(n+1)^s = s/(n+theta)^{s+1}.

    Closed form: n + theta = (s / difference)^{1/(s+1)}. Always lands
    in (0, 1); an escape would mean the difference itself was computed
    wrong, so it raises rather than returns.
    """
    if n < 1:
        raise ValueError("mean value exponent needs n >= 1")
    if not (s > 0):
        raise ValueError("mean value exponent needs s > 0")
    log_delta = -s * math.log(n) + math.log(-math.expm1(-s * math.log1p(1.0 / n)))
    theta = math.exp((math.log(s) - log_delta) / (s + 1.0)) - n
    if not (0.0 < theta < 1.0):
        raise ArithmeticError(
            f"mean-value exponent {theta} escaped (0,1) at n={n}, s={s}"
        )
    return theta


def _mean_value_theta_grid(j: np.ndarray, sigma: float) -> np.ndarray:
    log_delta = -sigma * np.log(j) + np.log(-np.expm1(-sigma * np.log1p(1.0 / j)))
    return np.exp((math.log(sigma) - log_delta) / (sigma + 1.0)) - j


@dataclass(frozen=True, eq=False)
class AbelDecomposition:
    """Summation by parts of sum_{j=n}^{n+m} (M(j)-M(j-1)) j^{-s}.

    boundary_terms holds (M(n+m)/(n+m)^s, -M(n-1)/n^s), signs applied;
    the second denominator is n^s because that is what the exact
    rearrangement produces. remainder is
    sum_{j=n}^{n+m-1} M(j) (j^{-s} - (j+1)^{-s}), the differences taken
    literally from the same power values the direct sum uses, and
    thetas records the mean-value exponent of each difference term at
    sigma = Re s (the mean-value statement is a real-exponent one).

    rearranged is not the rounded boundary_terms plus the rounded
    remainder: it is accumulated in one compensated pass over all the
    split partial products, so the only rounding separating it from
    direct_sum is what the power differences themselves carry.
    """

    s: complex
    n: int
    m: int
    direct_sum: complex
    boundary_terms: tuple[complex, complex]
    remainder: complex
    rearranged: complex
    thetas: np.ndarray


def _fsum_complex(terms: np.ndarray) -> complex:
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


_SPLITTER = 134217729.0  # 2^27 + 1, Dekker split constant


def _exact_int_mul(g: np.ndarray, x: np.ndarray):
    """g * x as an unevaluated two-float sum, exact for integer-valued
    g below 2^26 (Mertens values at any supported limit are far below
    that). Splitting x into 26-bit halves keeps each partial product
    representable."""
    c = _SPLITTER * x
    hi = c - (c - x)
    lo = x - hi
    return g * hi, g * lo


def abel_rearranged_sum(prefix: MertensPrefix, s: complex, n: int, m: int) -> AbelDecomposition:
    if n < 2:
        raise ValueError("block must start at n >= 2")
    if m < 0 or n + m > prefix.limit:
        raise ValueError("block extends beyond the prefix table")
    s = complex(s)
    if not (s.real > 0):
        raise ValueError("summation by parts wants Re s > 0")
    mvals = prefix.values
    j_full = np.arange(n, n + m + 1, dtype=np.float64)
    powers = np.exp(-s * np.log(j_full))  # j^{-s} for j = n..n+m
    # Coefficients are mu(j) in {-1,0,1}, so these products are exact
    # and the direct sum is the correctly rounded sum of the powers.
    f_block = (mvals[n : n + m + 1] - mvals[n - 1 : n + m]).astype(np.float64)
    direct = _fsum_complex(f_block * powers)
    b_coeff = np.array([mvals[n + m], -mvals[n - 1]], dtype=np.float64)
    b_power = np.array([powers[-1], powers[0]], dtype=np.complex128)
    b_re_hi, b_re_lo = _exact_int_mul(b_coeff, b_power.real)
    b_im_hi, b_im_lo = _exact_int_mul(b_coeff, b_power.imag)
    first = complex(b_re_hi[0] + b_re_lo[0], b_im_hi[0] + b_im_lo[0])
    second = complex(b_re_hi[1] + b_re_lo[1], b_im_hi[1] + b_im_lo[1])
    if m > 0:
        j = np.arange(n, n + m, dtype=np.float64)
        g = mvals[n : n + m].astype(np.float64)
        diff = powers[:-1] - powers[1:]
        re_hi, re_lo = _exact_int_mul(g, diff.real)
        im_hi, im_lo = _exact_int_mul(g, diff.imag)
        remainder = complex(math.fsum(np.concatenate([re_hi, re_lo])),
                            math.fsum(np.concatenate([im_hi, im_lo])))
        rearranged = complex(
            math.fsum(np.concatenate([b_re_hi, b_re_lo, re_hi, re_lo])),
            math.fsum(np.concatenate([b_im_hi, b_im_lo, im_hi, im_lo])))
        thetas = _mean_value_theta_grid(j, s.real)
    else:
        remainder = 0j
        rearranged = complex(math.fsum(np.concatenate([b_re_hi, b_re_lo])),
                             math.fsum(np.concatenate([b_im_hi, b_im_lo])))
        thetas = np.zeros(0, dtype=np.float64)
    return AbelDecomposition(s=s, n=n, m=m, direct_sum=direct,
                             boundary_terms=(first, second),
                             remainder=remainder, rearranged=rearranged,
                             thetas=thetas)


def prefix_ratio_scan(coeffs: CoefficientStream, s: float, n_max: int | None = None) -> ScanReport:
    """r(n) = P(n)/n^s on a geometric grid, P the prefix sums.

    stats carries the sup of |r| over the grid tail (top decade) and
    the first/last ratios, which is what the trend tables want.
    """
    n_max = coeffs.limit if n_max is None else n_max
    if n_max < 1 or n_max > coeffs.limit:
        raise ValueError(f"scan bound {n_max} outside stream range")
    prefix = np.cumsum(coeffs.values[1 : n_max + 1])
    grid = geometric_grid(n_max)
    p = prefix[grid - 1]
    r = p / np.power(grid.astype(np.float64), s)
    rows = [(int(g), float(pv), float(rv)) for g, pv, rv in zip(grid, p, r)]
    tail = np.abs(r[grid > n_max // 10]) if n_max >= 10 else np.abs(r)
    stats = {
        "tail_sup": float(tail.max()),
        "first_abs_ratio": float(abs(r[0])),
        "last_abs_ratio": float(abs(r[-1])),
    }
    return build_scan_report(f"ratio[{coeffs.name}]/n^{s}", ("n", "prefix", "ratio"),
                             rows, 0, 2, stats)


def dirichlet_convolution(a: CoefficientStream, b: CoefficientStream) -> CoefficientStream:
    """Exact divisor-sum convolution (a*b)(n) = sum_{d|n} a(d) b(n/d)."""
    if a.limit != b.limit:
        raise ValueError("convolution needs streams over the same range")
    n = a.limit
    out = np.zeros(n + 1, dtype=np.float64)
    av, bv = a.values, b.values
    for d in range(1, n + 1):
        k = n // d
        out[d :: d] += av[d] * bv[1 : k + 1]
    return _finish(out, f"({a.name})*({b.name})", n, "custom")


@dataclass(frozen=True, eq=False)
class AbscissaProbe:
    """Least-squares growth exponents of prefix sums on a log grid.

    conditional_estimate fits the running-max envelope of |P(n)|
    (signed prefix sums); absolute_estimate fits prefix sums of
    |lambda(n)|. Both are labeled estimates: finite data, no claim of
    convergence, just the observed slope.
    """

    conditional_estimate: float
    absolute_estimate: float
    grid: np.ndarray
    signed_envelope: np.ndarray
    absolute_prefix: np.ndarray


def abscissa_probe(coeffs: CoefficientStream, n_max: int | None = None) -> AbscissaProbe:
    n_max = coeffs.limit if n_max is None else n_max
    if n_max < 10_000:
        raise ValueError("abscissa probe wants at least 10^4 coefficients")
    if n_max > coeffs.limit:
        raise ValueError(f"probe bound {n_max} outside stream range")
    vals = coeffs.values[1 : n_max + 1]
    if not np.any(vals):
        raise ValueError("all-zero stream has no growth exponent")
    signed_prefix = np.cumsum(vals)
    abs_prefix = np.cumsum(np.abs(vals))
    grid = geometric_grid(n_max, start=10)
    envelope = np.maximum.accumulate(np.abs(signed_prefix[grid - 1]))
    conditional = _envelope_slope(grid, envelope)
    absolute = _envelope_slope(grid, abs_prefix[grid - 1])
    return AbscissaProbe(conditional_estimate=conditional,
                         absolute_estimate=absolute, grid=grid,
                         signed_envelope=envelope, absolute_prefix=abs_prefix[grid - 1])


def _envelope_slope(grid: np.ndarray, envelope: np.ndarray) -> float:
    mask = envelope > 0
    if mask.sum() < 2:
        return math.nan
    x = np.log(grid[mask].astype(np.float64))
    y = np.log(envelope[mask])
    slope = np.polyfit(x, y, 1)[0]
    return float(slope)


@dataclass(frozen=True)
class ConvergenceParams:
    """Abscissa bookkeeping for a product of two Dirichlet series.

    alpha is a conditional-convergence abscissa for the first factor,
    beta the absolute-convergence gap of the second; the product series
    is then summable for exponents beyond alpha + beta/2.
    """

    alpha: float
    beta: float

    @property
    def product_abscissa(self) -> float:
        return self.alpha + 0.5 * self.beta
