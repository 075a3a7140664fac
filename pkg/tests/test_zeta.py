import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetadesk.constants import euler_constant
from zetadesk.zeta import (IM_MAX, RE_MAX, RE_MIN, completed_zeta,
                           functional_equation_residual, gauss_pi,
                           log_gamma, log_power_constant,
                           log_power_constant_contour, origin_constants,
                           riemann_von_mangoldt, xi, zero_scan, zeta,
                           zeta_minus_pole, zeta_series_near_zero)

from .oracles import (EULER_GAMMA, GAUSS_PI_SPOTS, ORIGIN_CONSTANTS,
                      XI_AT_ZERO, ZERO_ORDINATES, ZETA_SPOTS)


def test_zeta_spot_values():
    for text, re_ref, im_ref in ZETA_SPOTS:
        ref = complex(re_ref, im_ref)
        got = zeta(complex(text))
        assert abs(got - ref) <= 1e-10 * abs(ref), text


def test_zeta_classical_points():
    assert abs(zeta(2.0) - math.pi ** 2 / 6.0) < 1e-14
    assert abs(zeta(0.0) + 0.5) < 1e-14
    assert abs(zeta(4.0) - math.pi ** 4 / 90.0) < 1e-14
    assert abs(zeta(-1.0) + 1.0 / 12.0) < 1e-13
    for k in (2, 4, 6, 8):
        assert abs(zeta(-float(k))) < 1e-12, k


def test_zeta_rejections():
    with pytest.raises(ValueError):
        zeta(1.0)
    with pytest.raises(ValueError):
        zeta(complex(RE_MAX + 0.5, 0.0))
    with pytest.raises(ValueError):
        zeta(complex(RE_MIN - 0.5, 0.0))
    with pytest.raises(ValueError):
        zeta(complex(0.5, IM_MAX + 1.0))


def test_pole_removed_value():
    assert abs(zeta_minus_pole(1.0) - euler_constant()) < 1e-13
    for s in (complex(0.9, 0.4), complex(1.6, -2.0), complex(-3.0, 7.0)):
        assert abs(zeta_minus_pole(s) + 1.0 / (s - 1.0) - zeta(s)) < 1e-12


def test_near_pole_accuracy():
    s = 1.001
    got = zeta(s)
    ref = ZETA_SPOTS[8]
    assert abs(got - complex(ref[1], ref[2])) <= 1e-10 * abs(got)


def test_log_gamma_agrees_with_gamma_on_reals():
    for x in (0.5, 1.0, 3.25, 7.0, 12.5):
        assert math.isclose(math.exp(log_gamma(x).real), math.gamma(x),
                            rel_tol=1e-13)


def test_log_gamma_complex_reflection_consistency():
    for z in (complex(-2.3, 1.7), complex(0.1, -4.0), complex(-5.5, 0.25)):
        direct = cmath.exp(log_gamma(z))
        via_reflection = cmath.pi / (cmath.sin(cmath.pi * z)
                                     * cmath.exp(log_gamma(1.0 - z)))
        assert abs(direct - via_reflection) <= 1e-11 * abs(direct)


def test_log_gamma_pole_rejection():
    for z in (0.0, -1.0, -7.0):
        with pytest.raises(ValueError):
            log_gamma(z)


def test_gauss_pi_spots():
    for x, ref in GAUSS_PI_SPOTS:
        assert math.isclose(gauss_pi(x), ref, rel_tol=1e-13), x


@given(st.floats(0.25, 25.0))
def test_gauss_pi_recurrence(x):
    assert math.isclose(gauss_pi(x), x * gauss_pi(x - 1.0), rel_tol=1e-11)


def test_gauss_pi_rejects_pole():
    with pytest.raises(ValueError):
        gauss_pi(-1.0)
    with pytest.raises(ValueError):
        gauss_pi(-3.0)


def test_completed_zeta_symmetry():
    for s in (complex(0.3, 4.0), complex(2.0, 11.0), complex(-1.5, 25.0),
              complex(0.5, 60.0)):
        lhs = completed_zeta(s)
        rhs = completed_zeta(1.0 - s)
        assert abs(lhs - rhs) <= 1e-10 * (abs(lhs) + abs(rhs))
    with pytest.raises(ValueError):
        completed_zeta(0.0)
    with pytest.raises(ValueError):
        completed_zeta(1.0)


def test_functional_equation_residual_grid():
    for sigma in (-2.0, -0.5, 0.3, 0.5, 0.8, 2.0):
        for t in (0.5, 3.0, 7.0, 15.0, 30.0):
            assert functional_equation_residual(complex(sigma, t)) <= 1e-8


def test_xi_real_even_and_anchored():
    assert math.isclose(xi(0.0).real, XI_AT_ZERO, rel_tol=1e-12)
    for t in (0.5, 3.7, 14.0, 31.4, 59.5):
        v = xi(t)
        w = xi(-t)
        assert abs(v.imag) <= 1e-10 * abs(v)
        assert abs(v - w) <= 1e-10 * abs(v)


def test_xi_changes_sign_at_first_zero():
    assert xi(14.0).real * xi(14.3).real < 0.0


def test_zero_count_estimate_monotone_and_guarded():
    values = [riemann_von_mangoldt(t) for t in (10.0, 30.0, 60.0, 100.0)]
    assert all(b > a for a, b in zip(values, values[1:]))
    with pytest.raises(ValueError):
        riemann_von_mangoldt(6.0)


def test_zero_scan_finds_known_ordinates():
    report = zero_scan(30.0, 0.05)
    assert report.count == 3
    for got, ref in zip(report.zeros.tolist(), ZERO_ORDINATES[:3]):
        assert abs(got - ref) < 1e-5
    assert report.prediction_gap == report.count - report.prediction


def test_zero_scan_rejections():
    with pytest.raises(ValueError):
        zero_scan(120.0)
    with pytest.raises(ValueError):
        zero_scan(50.0, 0.2)
    with pytest.raises(ValueError):
        zero_scan(10.0, 0.05, 20.0)


# -- constants at the origin ---------------------------------------------

def test_first_constant_closed_form():
    got = log_power_constant(1, 100_000)
    closed = 0.5 * math.log(2.0 * math.pi) - 1.0
    assert abs(got.value - closed) < 1e-12


def test_defect_route_matches_references():
    for k in range(1, 9):
        got = log_power_constant(k, 100_000)
        ref = ORIGIN_CONSTANTS[k]
        assert abs(got.value - ref) < 1e-11, k
        assert abs(got.value - ref) <= 5.0 * got.error_estimate + 1e-15, k


def test_defect_route_without_acceleration():
    raw = log_power_constant(3, 50_000, accelerate=False)
    acc = log_power_constant(3, 50_000, accelerate=True)
    ref = ORIGIN_CONSTANTS[3]
    assert raw.tail_correction == 0.0
    assert abs(raw.value - ref) <= 2.0 * raw.error_estimate
    assert abs(acc.value - ref) < abs(raw.value - ref)


def test_defect_route_rejections():
    with pytest.raises(ValueError):
        log_power_constant(0)
    with pytest.raises(ValueError):
        log_power_constant(9)
    with pytest.raises(ValueError):
        log_power_constant(1, 999)


def test_contour_route_matches_references():
    assert abs(log_power_constant_contour(0).value - 0.5) < 1e-12
    for k in range(1, 9):
        got = log_power_constant_contour(k)
        assert abs(got.value - ORIGIN_CONSTANTS[k]) < 1e-8, k
    with pytest.raises(ValueError):
        log_power_constant_contour(9)
    with pytest.raises(ValueError):
        log_power_constant_contour(1, radius=0.95)
    with pytest.raises(ValueError):
        log_power_constant_contour(1, nodes=63)


def test_routes_agree():
    report = origin_constants(5, 20_000)
    for k, gap in zip(report.k_values, report.route_gaps):
        assert gap < 1e-6, k


def test_series_matches_engine_near_origin():
    for r in (0.1, 0.3, 0.5):
        for angle in np.linspace(0.0, 2.0 * math.pi, 9)[:-1]:
            s = complex(r * math.cos(angle), r * math.sin(angle))
            assert abs(zeta_series_near_zero(s) - zeta(s)) < 1e-10, s
    with pytest.raises(ValueError):
        zeta_series_near_zero(0.51)
    with pytest.raises(ValueError):
        zeta_series_near_zero(0.1, order=9)
