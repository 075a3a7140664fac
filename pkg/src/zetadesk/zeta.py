"""Complex zeta machinery on a validated desk-scale box.

Euler-Maclaurin evaluation of zeta(s), the completed function
xi(t) on the critical line, sign-change zero scans with a counting
prediction, and the log-power constants that tie the Taylor expansion
of zeta at the origin to trapezoid defects of (log x)^k.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constants import BERNOULLI_OVER_FACTORIAL, euler_constant

# Euler-Maclaurin with eight correction terms is validated on this box;
# outside it the truncation estimates below were not checked.
RE_MIN = -10.0
RE_MAX = 10.0
IM_MAX = 120.0

TWO_PI = 2.0 * math.pi


def _require_in_box(s: complex) -> None:
    if not (RE_MIN <= s.real <= RE_MAX) or abs(s.imag) > IM_MAX:
        raise ValueError(
            f"s={s!r} outside validated box Re in [{RE_MIN:g},{RE_MAX:g}], "
            f"|Im| <= {IM_MAX:g}")


def _cexpm1(z: complex) -> complex:
    # exp(z)-1 without cancellation for small z; cos y - 1 handled as
    # -2 sin^2(y/2)
    x, y = z.real, z.imag
    ex1 = math.expm1(x)
    half = math.sin(0.5 * y)
    return complex(ex1 * math.cos(y) - 2.0 * half * half,
                   (ex1 + 1.0) * math.sin(y))


def _node_count(s: complex) -> int:
    return max(30, int(math.ceil(2.5 * abs(s.imag))))


def _em_minus_pole(s: complex) -> complex:
    """Euler-Maclaurin zeta(s) - 1/(s-1). Accurate for Re s >= -1/2;
    deeper left the head sum amplifies rounding by n^(1-Re s) and the
    reflection path below takes over."""
    n = _node_count(s)
    k = np.arange(1, n, dtype=np.float64)
    powers = np.exp(-s * np.log(k))
    head = complex(math.fsum(powers.real), math.fsum(powers.imag))
    log_n = math.log(n)
    if s == 1.0:
        smooth = complex(-log_n)  # limit of expm1((1-s) log n)/(s-1)
    else:
        smooth = _cexpm1((1.0 - s) * log_n) / (s - 1.0)
    nms = cmath.exp(-s * log_n)
    total = head + smooth + 0.5 * nms
    rising = s  # s (s+1) ... (s+2j-2), grown two factors per term
    scale = nms / n  # n^(-s-1)
    inv_nn = 1.0 / (n * n)
    for j, coeff in enumerate(BERNOULLI_OVER_FACTORIAL, start=1):
        total += coeff * rising * scale
        rising *= (s + (2 * j - 1)) * (s + 2 * j)
        scale *= inv_nn
    return total


_LOG_2 = math.log(2.0)
_LOG_PI = math.log(math.pi)


def _reflection_factor(s: complex) -> complex:
    # 2^s pi^(s-1) sin(pi s/2) Gamma(1-s); inside the box the huge
    # sin and tiny gamma magnitudes stay far from overflow
    return (cmath.exp(s * _LOG_2 + (s - 1.0) * _LOG_PI + log_gamma(1.0 - s))
            * cmath.sin(0.5 * math.pi * s))


def zeta(s: complex) -> complex:
    s = complex(s)
    if s == 1.0:
        raise ValueError("zeta has a pole at s = 1")
    _require_in_box(s)
    if s.real >= -0.5:
        return _em_minus_pole(s) + 1.0 / (s - 1.0)
    w = 1.0 - s
    return _reflection_factor(s) * (_em_minus_pole(w) + 1.0 / (w - 1.0))


def zeta_minus_pole(s: complex) -> complex:
    """zeta(s) - 1/(s-1), entire on the box; at s=1 this is the Euler
    constant."""
    s = complex(s)
    _require_in_box(s)
    if s.real >= -0.5:
        return _em_minus_pole(s)
    return zeta(s) - 1.0 / (s - 1.0)


_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(TWO_PI)


def log_gamma(z: complex) -> complex:
    """Lanczos approximation (g=7, 9 coefficients), reflected for
    Re z < 1/2. Branch matters only through exp for our callers."""
    z = complex(z)
    if z.real < 0.5:
        if z.imag == 0.0 and z.real == math.floor(z.real):
            raise ValueError(f"gamma pole at z={z.real:g}")
        return (math.log(math.pi) - cmath.log(cmath.sin(math.pi * z))
                - log_gamma(1.0 - z))
    w = z - 1.0
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (w + i)
    t = w + 7.5
    return _HALF_LOG_TWO_PI + (w + 0.5) * cmath.log(t) - t + cmath.log(acc)


def gauss_pi(x: float) -> float:
    """Factorial interpolation Pi(x) = x Gamma(x), real arguments."""
    x = float(x)
    if x <= -1.0 and x == math.floor(x):
        raise ValueError(f"factorial interpolation has a pole at x={x:g}")
    return cmath.exp(log_gamma(x + 1.0)).real


def completed_zeta(s: complex) -> complex:
    """Gamma(s/2) pi^(-s/2) zeta(s); invariant under s -> 1-s."""
    s = complex(s)
    if s == 0.0 or s == 1.0:
        raise ValueError("completed zeta has poles at s = 0 and s = 1")
    return cmath.exp(log_gamma(0.5 * s) - 0.5 * s * math.log(math.pi)) * zeta(s)


def functional_equation_residual(s: complex) -> float:
    """Relative defect |F(s) - F(1-s)| / |F(s)| of the reflection
    symmetry; both s and 1-s must sit in the validated box."""
    s = complex(s)
    a = completed_zeta(s)
    b = completed_zeta(1.0 - s)
    return abs(a - b) / (abs(a) + 1e-300)


def xi(t: float) -> complex:
    """Entire critical-line function
    1/2 s(s-1) Gamma(s/2) pi^(-s/2) zeta(s) at s = 1/2 + i t.
    Real for real t up to rounding residue in the imaginary part."""
    s = complex(0.5, float(t))
    value = 0.5 * s * (s - 1.0) * cmath.exp(
        log_gamma(0.5 * s) - 0.5 * s * math.log(math.pi))
    return value * zeta_minus_pole(s) + value / (s - 1.0)


def riemann_von_mangoldt(t: float) -> float:
    """Main-term zero-count prediction (t/2pi)(log(t/2pi) - 1)."""
    t = float(t)
    if t <= TWO_PI:
        raise ValueError("prediction needs t > 2 pi")
    u = t / TWO_PI
    return u * (math.log(u) - 1.0)


@dataclass(frozen=True, eq=False)
class ZeroScanReport:
    """Sign-change census of Re xi on [t_min, t_max].

    zeros holds bisection-refined ordinates; close_calls lists grid
    ordinates where |Re xi| dipped locally by several orders without a
    sign change (a flag for scan resolution, not an assertion that a
    zero was missed). prediction is nan when t_max <= 2 pi."""

    t_min: float
    t_max: float
    step: float
    zeros: np.ndarray
    close_calls: np.ndarray
    prediction: float

    @property
    def count(self) -> int:
        return int(self.zeros.size)

    @property
    def prediction_gap(self) -> float:
        if math.isnan(self.prediction):
            return math.nan
        return self.count - self.prediction


def _bisect_xi_real(lo: float, hi: float, flo: float) -> float:
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        fmid = xi(mid).real
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def zero_scan(t_max: float, step: float = 0.05, t_min: float = 0.0) -> ZeroScanReport:
    t_max = float(t_max)
    step = float(step)
    t_min = float(t_min)
    if not 0.0 <= t_min < t_max:
        raise ValueError("need 0 <= t_min < t_max")
    if t_max > 100.0:
        raise ValueError("scan validated only up to t = 100")
    if not 0.0 < step <= 0.05:
        raise ValueError("step must be in (0, 0.05]; coarser grids can "
                         "hop over close zero pairs")
    count = int(math.floor((t_max - t_min) / step)) + 1
    grid = t_min + step * np.arange(count, dtype=np.float64)
    if grid[-1] < t_max:
        grid = np.append(grid, t_max)
    values = np.array([xi(t).real for t in grid])
    flips = np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]
    zeros = np.array([_bisect_xi_real(grid[i], grid[i + 1], values[i])
                      for i in flips])
    absval = np.abs(values)
    scale = float(np.median(absval)) + 1e-300
    interior = np.arange(1, len(grid) - 1)
    local_min = ((absval[interior] <= absval[interior - 1])
                 & (absval[interior] <= absval[interior + 1])
                 & (absval[interior] < 1e-4 * scale))
    suspects = interior[local_min]
    no_flip = np.array([i - 1 not in flips and i not in flips
                        for i in suspects], dtype=bool)
    close_calls = grid[suspects[no_flip]] if suspects.size else np.zeros(0)
    prediction = riemann_von_mangoldt(t_max) if t_max > TWO_PI else math.nan
    return ZeroScanReport(t_min=t_min, t_max=t_max, step=step,
                          zeros=zeros, close_calls=np.asarray(close_calls),
                          prediction=prediction)


# ---------------------------------------------------------------------------
# Constants attached to the origin Taylor expansion of zeta, computed as
# limits of trapezoid defects of (log x)^k.

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)

# cells with m <= _PANEL_SPLIT get a subdivided quadrature; further out
# a single 12-node panel is already exact to machine precision (the
# split point is sized for exponents up to 8, where the 24th derivative
# driving the quadrature error still carries a large factorial)
_PANEL_SPLIT = 40
_PANEL_COUNT = 4


_PHI_ORDER = 20  # delta never exceeds log(3/2), so delta^i/i! past this
                 # order sits far below the rounding floor


def _centered_log_power(k: int, l0: np.ndarray, u: np.ndarray) -> np.ndarray:
    """(log x)^k minus its tangent-line-in-u affine part at the cell
    center, with u = (x - c)/c and l0 = log c.

    Expanded in powers of delta = log1p(u) with one fused coefficient
    per power: using delta - u = -(sum of delta^i/i!, i >= 2) exactly
    merges the tangent defect into the binomial terms, so the dominant
    quadratic contributions are never formed separately and cancelled.
    The naive f - affine difference loses all significant digits once
    c is large."""
    delta = np.log1p(u)
    base = k * l0 ** (k - 1)
    power = delta * delta
    out = np.zeros_like(delta)
    for i in range(2, _PHI_ORDER + 1):
        coeff = -base / math.factorial(i)
        if i <= k:
            coeff = coeff + math.comb(k, i) * l0 ** (k - i)
        out = out + coeff * power
        power = power * delta
    return out


def _defect_sum(k: int, n: int) -> tuple[float, float]:
    """Sum over cells [m-1, m], m = 2..n, of
    (f(m-1)+f(m))/2 - integral of f, for f = (log x)^k.
    Returns (sum, absolute-value sum) accumulated exactly."""
    m = np.arange(2, n + 1, dtype=np.float64)
    c = m - 0.5
    l0 = np.log(c)
    half = 0.5 / c
    trapz = 0.5 * (_centered_log_power(k, l0, half)
                   + _centered_log_power(k, l0, -half))
    integral = np.zeros_like(c)
    split = min(_PANEL_SPLIT, n)
    # single 12-node panel over each full cell of m > split
    body = slice(split - 1, None)
    for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
        u = (0.5 * node) / c[body]
        integral[body] += 0.5 * weight * _centered_log_power(k, l0[body], u)
    # subdivided panels for the cells of m = 2..split, same centered
    # integrand
    for i in range(split - 1):
        cc = c[i]
        ll = l0[i]
        acc = 0.0
        width = 1.0 / _PANEL_COUNT
        for p in range(_PANEL_COUNT):
            mid = (m[i] - 1.0) + (p + 0.5) * width
            x = mid + 0.5 * width * _GL_NODES
            phi = _centered_log_power(k, np.full_like(x, ll), (x - cc) / cc)
            acc += 0.5 * width * float(np.dot(_GL_WEIGHTS, phi))
        integral[i] = acc
    defects = trapz - integral
    return math.fsum(defects), math.fsum(np.abs(defects))


def _derivative_polys(k: int, r_max: int) -> list[np.ndarray]:
    """Coefficient arrays (ascending powers of L, fixed length k) of
    P_r with d^r/dx^r (log x)^k = x^(-r) P_r(log x); the recurrence
    P_{r+1} = P_r' - r P_r (prime meaning d/dL) keeps the degree at
    k-1 and integer coefficients throughout."""
    p = np.zeros(k, dtype=np.float64)
    p[k - 1] = k  # P_1 = k L^(k-1)
    polys = [p]
    for r in range(1, r_max):
        prev = polys[-1]
        diff = np.zeros(k, dtype=np.float64)
        if k > 1:
            diff[:-1] = prev[1:] * np.arange(1, k, dtype=np.float64)
        polys.append(diff - r * prev)
    return polys


def _log_power_derivative(k: int, r: int, x: float) -> float:
    poly = _derivative_polys(k, r)[r - 1]
    lx = math.log(x)
    return x ** (-r) * float(np.polynomial.polynomial.polyval(lx, poly))


@dataclass(frozen=True, eq=False)
class LogPowerConstant:
    """Limit constant of sum (log m)^k - integral - half endpoint,
    estimated from the cutoff-n trapezoid defect sum.

    tail_correction is the Euler-Maclaurin tail through the third
    derivative order (zero when acceleration is off); error_estimate
    combines the next omitted tail term with an accumulation floor."""

    k: int
    n: int
    accelerated: bool
    value: float
    defect_sum: float
    tail_correction: float
    error_estimate: float


@lru_cache(maxsize=128)
def log_power_constant(k: int, n: int = 100_000,
                       accelerate: bool = True) -> LogPowerConstant:
    if k < 1 or k > 8:
        raise ValueError("exponent k must be in 1..8; the k = 0 constant "
                         "is 1/2 by the series normalization")
    if n < 1000:
        raise ValueError("cutoff n must be at least 1000")
    defect, abs_defect = _defect_sum(k, n)
    tail = 0.0
    if accelerate:
        tail = -math.fsum(
            BERNOULLI_OVER_FACTORIAL[j - 1] * _log_power_derivative(k, 2 * j - 1, float(n))
            for j in range(1, 4))
    next_term = abs(BERNOULLI_OVER_FACTORIAL[3]
                    * _log_power_derivative(k, 7, float(n)))
    floor = 4e-16 * (1.0 + abs_defect)
    if not accelerate:
        # without the tail the truncation error is the whole first
        # Euler-Maclaurin tail term
        next_term = abs(BERNOULLI_OVER_FACTORIAL[0]
                        * _log_power_derivative(k, 1, float(n)))
    return LogPowerConstant(k=k, n=n, accelerated=bool(accelerate),
                            value=defect + tail, defect_sum=defect,
                            tail_correction=tail,
                            error_estimate=next_term + floor)


@lru_cache(maxsize=8)
def _zeta_ring(radius: float, nodes: int) -> np.ndarray:
    theta = TWO_PI * np.arange(nodes) / nodes
    return np.array([zeta(complex(radius * math.cos(a), radius * math.sin(a)))
                     for a in theta])


@dataclass(frozen=True, eq=False)
class ContourConstant:
    """Same limit constant recovered from a Cauchy integral for the
    k-th Taylor coefficient of zeta at the origin. convergence_gap is
    the change when the node count is halved; treat the value as
    unconverged when the gap is not small next to the value."""

    k: int
    radius: float
    nodes: int
    value: float
    convergence_gap: float


def log_power_constant_contour(k: int, radius: float = 0.5,
                               nodes: int = 512) -> ContourConstant:
    if k < 0 or k > 8:
        raise ValueError("exponent k must be in 0..8")
    if not 0.1 <= radius <= 0.9:
        raise ValueError("contour radius must stay in [0.1, 0.9], inside "
                         "the pole at s=1")
    if nodes < 64 or nodes % 2:
        raise ValueError("need an even node count of at least 64")
    ring = _zeta_ring(float(radius), int(nodes))
    theta = TWO_PI * np.arange(nodes) / nodes
    phases = np.exp(-1j * k * theta)

    def coefficient(values: np.ndarray, ph: np.ndarray) -> float:
        total = complex(math.fsum((values * ph).real) / len(values),
                        math.fsum((values * ph).imag) / len(values))
        return total.real / radius ** k

    c_full = coefficient(ring, phases)
    c_half = coefficient(ring[::2], phases[::2])
    sign = -1.0 if k % 2 else 1.0
    value = sign * math.factorial(k) * (c_full + 1.0)
    gap = abs(math.factorial(k) * (c_full - c_half))
    return ContourConstant(k=k, radius=radius, nodes=nodes,
                           value=value, convergence_gap=gap)


@dataclass(frozen=True, eq=False)
class ZetaOriginConstants:
    """Defect-route and contour-route values side by side for k = 1..k_max."""

    n: int
    k_values: tuple[int, ...]
    defect_route: tuple[LogPowerConstant, ...]
    contour_route: tuple[ContourConstant, ...]

    @property
    def route_gaps(self) -> tuple[float, ...]:
        return tuple(abs(d.value - c.value)
                     for d, c in zip(self.defect_route, self.contour_route))


def origin_constants(k_max: int = 8, n: int = 100_000) -> ZetaOriginConstants:
    if k_max < 1 or k_max > 8:
        raise ValueError("k_max must be in 1..8")
    ks = tuple(range(1, k_max + 1))
    defect = tuple(log_power_constant(k, n) for k in ks)
    contour = tuple(log_power_constant_contour(k) for k in ks)
    return ZetaOriginConstants(n=n, k_values=ks, defect_route=defect,
                               contour_route=contour)


def zeta_series_near_zero(s: complex, order: int = 8) -> complex:
    """Taylor evaluation 1/(s-1) + 1/2 + sum of signed constants times
    s^k / k!, valid for |s| <= 1/2 where the omitted tail sits near
    1e-12."""
    s = complex(s)
    if abs(s) > 0.5:
        raise ValueError("series validated only for |s| <= 1/2")
    if order < 1 or order > 8:
        raise ValueError("order must be in 1..8")
    total = 1.0 / (s - 1.0) + 0.5
    term = 1.0 + 0j
    for k in range(1, order + 1):
        term *= -s / k  # (-1)^k s^k / k!
        total += log_power_constant(k).value * term
    return total
