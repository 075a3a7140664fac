"""Prime-counting asymptotics: the psi decomposition over prime-power
weights, deviation statistics toward the prime number theorem, the
divisor-sum ratio, the logarithmic integral, weighted prime-power
counts, reciprocal-prime constants, prime windows, and an exact-integer
explorer for a floor-quotient identity whose sign pattern admits more
than one reading."""

from __future__ import annotations

import math
import weakref
from dataclasses import dataclass

import numpy as np

from .arith import ArithTable, MertensPrefix, chebyshev_theta, mangoldt_weight
from .constants import euler_constant
from .reports import ScanReport, build_scan_report, geometric_grid


def integer_root(n: int, k: int) -> int:
    """floor(n^(1/k)) exactly; the float estimate is corrected against
    the neighboring integers so perfect powers never come out short."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


_MANGOLDT_CACHE: "weakref.WeakKeyDictionary[ArithTable, np.ndarray]" = (
    weakref.WeakKeyDictionary())
_DIVISOR_CACHE: "weakref.WeakKeyDictionary[ArithTable, np.ndarray]" = (
    weakref.WeakKeyDictionary())
_RECIP_CACHE: "weakref.WeakKeyDictionary[ArithTable, np.ndarray]" = (
    weakref.WeakKeyDictionary())


def mangoldt_prefix(table: ArithTable) -> np.ndarray:
    """Prefix sums of the prime-power weight (index 0 unused): entry n
    holds weight(1) + ... + weight(n) with weight(1) = 2C and log p at
    prime powers. Cached per table."""
    got = _MANGOLDT_CACHE.get(table)
    if got is not None:
        return got
    limit = table.limit
    w = np.zeros(limit + 1, dtype=np.float64)
    w[1] = 2.0 * euler_constant()
    if limit >= 2:
        primes = table.primes
        w[primes] = np.log(primes)
        for p in primes[primes <= integer_root(limit, 2)]:
            lp = math.log(p)
            q = int(p) * int(p)
            while q <= limit:
                w[q] = lp
                q *= int(p)
    np.cumsum(w, out=w)
    w.setflags(write=False)
    _MANGOLDT_CACHE[table] = w
    return w


def divisor_prefix(table: ArithTable) -> np.ndarray:
    """Exact int64 prefix sums of the divisor-count table, cached."""
    got = _DIVISOR_CACHE.get(table)
    if got is not None:
        return got
    d = np.zeros(table.limit + 1, dtype=np.int64)
    d[1:] = table.divisor_count[1:]
    np.cumsum(d, out=d)
    d.setflags(write=False)
    _DIVISOR_CACHE[table] = d
    return d


def psi_sum(table: ArithTable, n: int) -> float:
    """Chebyshev psi(n) as the root-stacked theta sum over n^(1/k) >= 2."""
    if n < 1 or n > table.limit:
        raise ValueError("n must lie in 1..limit")
    total = 0.0
    k = 1
    while True:
        r = integer_root(n, k)
        if r < 2:
            break
        total += chebyshev_theta(table, r)
        k += 1
    return total


@dataclass(frozen=True, eq=False)
class PsiDecomposition:
    """Both sides of sum_{m<=n} weight(m) = 2C + theta(n) +
    theta(n^(1/2)) + ... and their gap."""

    n: int
    lhs: float
    rhs: float

    @property
    def diff(self) -> float:
        return self.lhs - self.rhs


def psi_decomposition_check(table: ArithTable, n: int) -> PsiDecomposition:
    if n < 1 or n > table.limit:
        raise ValueError("n must lie in 1..limit")
    lhs = float(mangoldt_prefix(table)[n])
    rhs = 2.0 * euler_constant() + psi_sum(table, n)
    return PsiDecomposition(n=n, lhs=lhs, rhs=rhs)


def _check_exponent(s: float) -> float:
    s = float(s)
    if not 0.0 < s <= 1.0:
        raise ValueError("exponent s must lie in (0, 1]")
    return s


def psi_deviation(table: ArithTable, n: int, s: float) -> float:
    """(psi(n) - n) / n^s, the remainder statistic of the stacked sum."""
    s = _check_exponent(s)
    return (psi_sum(table, n) - n) / float(n) ** s


def theta_deviation(table: ArithTable, n: int, s: float) -> float:
    """(theta(n) - n) / n^s; tends to 0 for s > 3/4 by the claim under
    test, so scans report its decay without asserting the limit."""
    s = _check_exponent(s)
    if n < 1 or n > table.limit:
        raise ValueError("n must lie in 1..limit")
    return (chebyshev_theta(table, n) - n) / float(n) ** s


def theta_deviation_scan(table: ArithTable, s: float,
                         n_max: int | None = None,
                         n_min: int = 10) -> ScanReport:
    s = _check_exponent(s)
    if n_max is None:
        n_max = table.limit
    if not n_min < n_max <= table.limit:
        raise ValueError("need n_min < n_max <= limit")
    grid = geometric_grid(n_max, start=n_min)
    rows = []
    for n in grid.tolist():
        theta = chebyshev_theta(table, n)
        rows.append((float(n), theta, (theta - n) / float(n) ** s))
    report = build_scan_report(
        label=f"theta deviation at s={s:g}",
        columns=("n", "theta", "deviation"),
        rows=rows, key_index=0, value_index=2,
        stats={"first_abs": abs(rows[0][2]), "last_abs": abs(rows[-1][2]),
               "exponent": s})
    return report


def divisor_asymptotic_ratio(table: ArithTable, n: int) -> float:
    """(sum_{m<=n} d(m) - n log n - (2C-1) n) / sqrt(n); stays between
    fixed bounds at desk scale."""
    if n < 1 or n > table.limit:
        raise ValueError("n must lie in 1..limit")
    total = float(divisor_prefix(table)[n])
    c2 = 2.0 * euler_constant() - 1.0
    main = n * math.log(n) + c2 * n
    return (total - main) / math.sqrt(n)


def divisor_ratio_scan(table: ArithTable, n_max: int | None = None,
                       every: int | None = None,
                       n_min: int = 1) -> ScanReport:
    """Ratio rows on either an arithmetic grid (every) or the default
    geometric grid."""
    if n_max is None:
        n_max = table.limit
    if not 1 <= n_min <= n_max <= table.limit:
        raise ValueError("need 1 <= n_min <= n_max <= limit")
    if every is not None:
        if every < 1:
            raise ValueError("every must be positive")
        ns = np.arange(max(n_min, every), n_max + 1, every, dtype=np.int64)
        if ns.size == 0:
            ns = np.array([n_max], dtype=np.int64)
    else:
        ns = geometric_grid(n_max, start=n_min)
    prefix = divisor_prefix(table)
    c2 = 2.0 * euler_constant() - 1.0
    nf = ns.astype(np.float64)
    ratios = (prefix[ns].astype(np.float64) - nf * np.log(nf) - c2 * nf) / np.sqrt(nf)
    rows = [(float(n), float(r)) for n, r in zip(ns, ratios)]
    return build_scan_report(
        label="divisor-sum ratio", columns=("n", "ratio"), rows=rows,
        key_index=0, value_index=1,
        stats={"sup_abs": float(np.max(np.abs(ratios)))})


_LI_TAIL_EPS = 1e-18


def li(x: float) -> float:
    """Principal-value logarithmic integral for x > 1, through the
    all-positive-term expansion C + log log x + sum (log x)^k/(k k!);
    every term is positive so no cancellation enters."""
    x = float(x)
    if not x > 1.0:
        raise ValueError("logarithmic integral implemented for x > 1 only")
    lx = math.log(x)
    terms = [euler_constant(), math.log(lx)]
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= lx / k
        contribution = term / k
        terms.append(contribution)
        if contribution < _LI_TAIL_EPS * max(1.0, lx):
            break
        if k > 500:
            raise ArithmeticError("series failed to settle")
    return math.fsum(terms)


def riemann_prime_count(table: ArithTable, x: float) -> float:
    """Weighted prime-power count: sum over k of pi(x^(1/k))/k while
    x^(1/k) >= 2, with exact integer root boundaries."""
    x = float(x)
    if x < 0 or x > table.limit:
        raise ValueError("x must lie in 0..limit")
    base = int(math.floor(x))
    total = []
    k = 1
    while True:
        r = integer_root(base, k) if base >= 2 else 0
        if r < 2:
            break
        total.append(table.prime_count(r) / k)
        k += 1
    return math.fsum(total) if total else 0.0


def prime_count_gap_ratio(table: ArithTable, x: float, s: float) -> float:
    """(weighted count - li(x)) / x^s, the normalized gap. At desk
    scale the ratio visibly decays for s = 3/4; exponents closer to
    1/2 are what the scan exists to probe, not to assert."""
    s = _check_exponent(s)
    return (riemann_prime_count(table, x) - li(x)) / float(x) ** s


def prime_count_gap_scan(table: ArithTable, s: float,
                         x_max: int | None = None,
                         x_min: int = 10) -> ScanReport:
    s = _check_exponent(s)
    if x_max is None:
        x_max = table.limit
    if not 2 <= x_min < x_max <= table.limit:
        raise ValueError("need 2 <= x_min < x_max <= limit")
    grid = geometric_grid(x_max, start=x_min)
    rows = [(float(xv), prime_count_gap_ratio(table, float(xv), s))
            for xv in grid.tolist()]
    return build_scan_report(
        label=f"prime-count gap ratio at s={s:g}",
        columns=("x", "ratio"), rows=rows, key_index=0, value_index=1,
        stats={"first_abs": abs(rows[0][1]), "last_abs": abs(rows[-1][1]),
               "exponent": s})


def mertens_constant_estimate(table: ArithTable, n: int) -> float:
    """sum_{p<=n} 1/p - log log n; converges like 1/log n, so callers
    should only read a couple of digits."""
    if n < 10:
        raise ValueError("estimate needs n >= 10")
    if n > table.limit:
        raise ValueError("n exceeds the table limit")
    got = _RECIP_CACHE.get(table)
    if got is None:
        got = np.cumsum(1.0 / table.primes.astype(np.float64))
        got.setflags(write=False)
        _RECIP_CACHE[table] = got
    count = table.prime_count(n)
    return float(got[count - 1]) - math.log(math.log(n))


def prime_window_count(table: ArithTable, n: int, h: float) -> int:
    """Primes in the half-open window (n, (1+h) n]."""
    if h <= 0:
        raise ValueError("window width h must be positive")
    if n < 1:
        raise ValueError("n must be at least 1")
    upper = (1.0 + h) * n
    if upper > table.limit:
        raise ValueError("window extends beyond the table limit")
    return table.prime_count(upper) - table.prime_count(n)


def prime_window_decades(table: ArithTable, h: float, start: int,
                         stop: int) -> list[tuple[int, float, int]]:
    """(n, upper bound, count) rows with n stepping by decades."""
    if start < 1 or start > stop:
        raise ValueError("need 1 <= start <= stop")
    rows = []
    n = start
    while n <= stop:
        rows.append((n, (1.0 + h) * n, prime_window_count(table, n, h)))
        n *= 10
    return rows


# ---------------------------------------------------------------------------
# Floor-quotient identity explorer. The identity admits several
# readings: three sign conventions for the left-hand alternating sum
# and two parity conventions for the step weight h. Every combination
# is evaluated and compared side by side; nothing here privileges one
# reading ahead of the measurement.

LHS_CONVENTIONS = ("all_minus", "alternating", "plus_after_first")
H_READINGS = ("even_is_one", "odd_is_one")


def _lhs_variants(g_at_quotients: np.ndarray) -> dict[str, int]:
    terms = g_at_quotients.astype(np.int64)
    k = len(terms)
    signs_minus = np.ones(k, dtype=np.int64)
    signs_minus[1:] = -1
    signs_alt = np.where(np.arange(k) % 2 == 0, 1, -1).astype(np.int64)
    signs_plus = np.ones(k, dtype=np.int64)
    if k > 1:
        signs_plus[1] = -1
    return {
        "all_minus": int(np.dot(signs_minus, terms)),
        "alternating": int(np.dot(signs_alt, terms)),
        "plus_after_first": int(np.dot(signs_plus, terms)),
    }


@dataclass(frozen=True, eq=False)
class FloorIdentityProbe:
    """All readings of the identity at one n: left side under each sign
    convention, right side under each parity reading of h, and the
    (convention, reading) pairs that agree exactly. bound_holds records
    |lhs| < 2k+1 (and <= k+1 for even k) for the matching conventions;
    None when nothing matches."""

    n: int
    k: int
    lhs: dict[str, int]
    rhs: dict[str, int]
    matches: tuple[tuple[str, str], ...]
    bound_holds: bool | None


def floor_identity_probe(prefix: MertensPrefix, table: ArithTable,
                         n: int) -> FloorIdentityProbe:
    if n < 1 or n > prefix.limit or n > table.limit:
        raise ValueError("n must lie in 1..limit of both tables")
    k = integer_root(n, 2)
    j = np.arange(1, k + 1, dtype=np.int64)
    quotients = n // j
    g_q = prefix.values[quotients]
    lhs = _lhs_variants(g_q)
    f_j = table.mu[j].astype(np.int64)
    parity_even = (quotients % 2 == 0)
    h_even = parity_even.astype(np.int64)
    h_odd = 1 - h_even
    g_k = int(prefix.values[k])
    rhs = {
        "even_is_one": -1 + (1 - k % 2) * g_k - int(np.dot(h_even, f_j)),
        "odd_is_one": -1 + (k % 2) * g_k - int(np.dot(h_odd, f_j)),
    }
    matches = tuple((conv, reading)
                    for conv in LHS_CONVENTIONS
                    for reading in H_READINGS
                    if lhs[conv] == rhs[reading])
    bound_holds: bool | None = None
    if matches:
        # claimed size bound: < 2k+1 always, tightening to <= k+1 when
        # k is even; checked only for readings that actually match
        bound_holds = all(
            abs(lhs[conv]) < 2 * k + 1
            and (k % 2 == 1 or abs(lhs[conv]) <= k + 1)
            for conv, _ in matches)
    return FloorIdentityProbe(n=n, k=k, lhs=lhs, rhs=rhs,
                              matches=matches, bound_holds=bound_holds)


@dataclass(frozen=True, eq=False)
class FloorIdentitySweep:
    """Match counting over 1..n_max: how often each (convention,
    reading) pair reproduces the right side exactly, plus how many n
    matched under no reading at all and how many matching n broke the
    size bound."""

    n_max: int
    total: int
    match_counts: dict[tuple[str, str], int]
    unmatched: int
    bound_violations: int


def floor_identity_sweep(prefix: MertensPrefix, table: ArithTable,
                         n_max: int) -> FloorIdentitySweep:
    if n_max < 1 or n_max > prefix.limit or n_max > table.limit:
        raise ValueError("n_max must lie in 1..limit of both tables")
    counts = {(conv, reading): 0
              for conv in LHS_CONVENTIONS for reading in H_READINGS}
    unmatched = 0
    violations = 0
    for n in range(1, n_max + 1):
        probe = floor_identity_probe(prefix, table, n)
        if probe.matches:
            for pair in probe.matches:
                counts[pair] += 1
            if probe.bound_holds is False:
                violations += 1
        else:
            unmatched += 1
    return FloorIdentitySweep(n_max=n_max, total=n_max,
                              match_counts=counts, unmatched=unmatched,
                              bound_violations=violations)


__all__ = [
    "integer_root", "mangoldt_prefix", "divisor_prefix", "psi_sum",
    "PsiDecomposition", "psi_decomposition_check", "psi_deviation",
    "theta_deviation", "theta_deviation_scan", "divisor_asymptotic_ratio",
    "divisor_ratio_scan", "li", "riemann_prime_count",
    "prime_count_gap_ratio", "prime_count_gap_scan",
    "mertens_constant_estimate", "prime_window_count",
    "prime_window_decades", "LHS_CONVENTIONS", "H_READINGS",
    "FloorIdentityProbe", "floor_identity_probe", "FloorIdentitySweep",
    "floor_identity_sweep", "mangoldt_weight",
]
