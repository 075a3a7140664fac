"""Independent reference values and reference algorithms.

Numeric literals were frozen from mpmath 1.3.0 at 40 decimal digits
(zetazero, zeta derivatives at 0, li, gamma); algorithms here avoid the
package's own sieves and series so agreement actually means something.
"""

import math

# Imaginary parts of the first 29 nontrivial zeta zeros.
ZERO_ORDINATES = (
    14.134725141734695, 21.022039638771556, 25.01085758014569,
    30.424876125859512, 32.93506158773919, 37.586178158825675,
    40.9187190121475, 43.327073280915, 48.00515088116716,
    49.7738324776723, 52.970321477714464, 56.44624769706339,
    59.34704400260235, 60.83177852460981, 65.1125440480816,
    67.07981052949417, 69.54640171117398, 72.0671576744819,
    75.70469069908393, 77.1448400688748, 79.33737502024937,
    82.91038085408603, 84.73549298051705, 87.42527461312523,
    88.80911120763446, 92.49189927055849, 94.65134404051989,
    95.87063422824531, 98.83119421819369,
)

# Taylor-coefficient constants of zeta at the origin, index k = 0..8:
# (-1)^k (zeta^(k)(0) + k!). Entry 1 equals log(2 pi)/2 - 1.
ORIGIN_CONSTANTS = (
    0.5,
    -0.08106146679532726,
    -0.006356455908584851,
    0.004711166862254448,
    0.002896811986292041,
    0.00023290755845472455,
    -0.0009368251300509295,
    -0.0008498237650016692,
    -0.00023243173551155957,
)

# (s as a Python complex literal string, Re zeta(s), Im zeta(s))
ZETA_SPOTS = (
    ("2", 1.6449340668482264, 0.0),
    ("0.5+14.1j", 0.0046984001834891355, -0.027058282374250772),
    ("-0.5+3j", 0.35291387981928724, 0.012124954416036981),
    ("3-7j", 1.0142003689711159, -0.09612539585802243),
    ("-2.5+0.5j", 0.012621034169355214, -0.0021308503461064834),
    ("0.25+37j", -0.257974407660296, -1.5564815579095117),
    ("-9+110j", -570358153336.9143, -321022355921.08765),
    ("9.5-60j", 0.9989584529189528, -0.0009357430614469542),
    ("1.001", 1000.5772884759015, 0.0),
    ("0.5+99.5j", 1.5922916680040429, 1.2972001583316535),
)

# (x, principal-value logarithmic integral li(x))
LI_SPOTS = (
    (2.0, 1.045163780117493),
    (10.0, 6.165599504787298),
    (1000.0, 177.60965799015221),
    (100000.0, 9629.809001050799),
    (1000000.0, 78627.54915946219),
)

# (x, Gamma(x + 1))
GAUSS_PI_SPOTS = (
    (0.5, 0.886226925452758),
    (1.0, 1.0),
    (2.5, 3.3233509704478426),
    (-0.3, 1.298055332647558),
    (6.0, 720.0),
    (3.75, 16.58620653922594),
)

EULER_GAMMA = 0.5772156649015329
XI_AT_ZERO = 0.4971207781883141  # xi(1/2), i.e. ordinate t = 0

_SMALL_PRIMES = None


def _small_primes(bound: int):
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None or _SMALL_PRIMES[-1] ** 2 < bound:
        top = max(400, int(math.isqrt(bound)) + 2)
        flags = bytearray([1]) * (top + 1)
        flags[0] = flags[1] = 0
        for p in range(2, int(math.isqrt(top)) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        _SMALL_PRIMES = [p for p in range(2, top + 1) if flags[p]]
    return _SMALL_PRIMES


def trial_factorization(n: int) -> dict:
    """Prime factorization by trial division (independent of any sieve
    under test; the prime list above is a bytearray sieve, a different
    code path from the package's numpy one)."""
    if n < 1:
        raise ValueError("factorization needs n >= 1")
    factors = {}
    rest = n
    for p in _small_primes(n):
        if p * p > rest:
            break
        while rest % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rest //= p
    if rest > 1:
        factors[rest] = factors.get(rest, 0) + 1
    return factors


def trial_mobius(n: int) -> int:
    factors = trial_factorization(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def trial_divisor_count(n: int) -> int:
    out = 1
    for e in trial_factorization(n).values():
        out *= e + 1
    return out


def trial_is_prime(n: int) -> bool:
    return n >= 2 and trial_factorization(n) == {n: 1}


def li_by_quadrature(x: float) -> float:
    """li(x) for x > 2 as li(2) + integral of 1/log t over [2, x]; the
    integrand is smooth there, so quad is an independent route."""
    from scipy.integrate import quad

    if x <= 2.0:
        raise ValueError("quadrature oracle wants x > 2")
    value, err = quad(lambda t: 1.0 / math.log(t), 2.0, x,
                      epsabs=1e-12, epsrel=1e-12, limit=500)
    if err > 1e-9:
        raise ArithmeticError(f"quadrature too loose: {err}")
    return LI_SPOTS[0][1] + value
