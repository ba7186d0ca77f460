"""Exact arithmetic with infinitesimals and infinities, and the calculus built on it.

The core value type is a finite series in the infinite unit ``w`` with
rational coefficients; on top of it sit exact polynomial calculus,
closed-form Riemann sums at infinite partition counts, discrete
summation as a difference of point values, and continuous
representations of step functions with infinitesimal bridges.
"""
from .core import (
    DEFAULT_TRUNCATION_FLOOR,
    Gossamer,
    InfinitePartError,
    Kind,
    NotInfinitesimalError,
    ParseError,
    ZeroMagnitudeError,
    bounded_series_sum,
    default_floor,
    omega,
)
from .polynomial import (
    Polynomial,
    ftc_inverse_check,
    order_swap_demo,
    scale_integral_identity,
    shift_integral_identity,
)
from .report import CaseResult, SUITE_NAMES, VerificationReport, run_suite
from .riemann import (
    UniformRiemannSum,
    bernoulli_number,
    conjecture_probe,
    definite_to_sum_pipeline,
    divergent_integral_via_sum,
    faulhaber,
    integrability_check,
    panel_asymptotic,
    riemann_limit,
    riemann_remainder,
    uniform_riemann_sum,
)
from .steps import (
    BridgeShape,
    SmoothedFunction,
    StepFunction,
    area_delta,
    iverson_step,
    sample_curve,
    smooth,
    smoothed_area,
    step_sum,
    transfer_to_real,
    trapezoid_discontinuity_budget,
)
from .sums import (
    ClosedFormSum,
    indefinite_sum,
    lower_sum_at_point,
    sum_at_point,
    sum_ftc,
    sum_ftc_half_open,
    sum_interval_bruteforce,
    sum_to_integral_bridge,
)

__all__ = [
    "BridgeShape",
    "CaseResult",
    "ClosedFormSum",
    "DEFAULT_TRUNCATION_FLOOR",
    "Gossamer",
    "InfinitePartError",
    "Kind",
    "NotInfinitesimalError",
    "ParseError",
    "Polynomial",
    "SUITE_NAMES",
    "SmoothedFunction",
    "StepFunction",
    "UniformRiemannSum",
    "VerificationReport",
    "ZeroMagnitudeError",
    "area_delta",
    "bernoulli_number",
    "bounded_series_sum",
    "conjecture_probe",
    "default_floor",
    "definite_to_sum_pipeline",
    "divergent_integral_via_sum",
    "faulhaber",
    "ftc_inverse_check",
    "indefinite_sum",
    "integrability_check",
    "iverson_step",
    "lower_sum_at_point",
    "omega",
    "order_swap_demo",
    "panel_asymptotic",
    "riemann_limit",
    "riemann_remainder",
    "run_suite",
    "sample_curve",
    "scale_integral_identity",
    "shift_integral_identity",
    "smooth",
    "smoothed_area",
    "step_sum",
    "sum_at_point",
    "sum_ftc",
    "sum_ftc_half_open",
    "sum_interval_bruteforce",
    "sum_to_integral_bridge",
    "transfer_to_real",
    "trapezoid_discontinuity_budget",
    "uniform_riemann_sum",
]
