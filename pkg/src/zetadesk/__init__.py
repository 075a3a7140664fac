"""Desk-scale numerical laboratory for Mertens sums, Dirichlet series,
and the Riemann xi function."""

from .arith import (ArithTable, MertensPrefix, build_tables, chebyshev_theta,
                    load_cache, mertens_identity_check, mertens_prefix,
                    mertens_ratio_window, save_cache)
from .asymptotics import (li, mertens_constant_estimate, psi_sum,
                          riemann_prime_count)
from .dirichlet import (abel_rearranged_sum, dirichlet_convolution,
                        mobius_stream, partial_sum)
from .weierstrass import exp_difference_product, zero_set_check
from .zeta import (completed_zeta, log_power_constant, origin_constants,
                   xi, zero_scan, zeta, zeta_series_near_zero)

__version__ = "0.1.0"
