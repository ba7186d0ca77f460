"""Uniform Riemann sums evaluated in closed form at an infinite partition count.

The sum over j of f(j/nu)*(1/nu) is never iterated: each monomial is
collapsed through its power-sum closed form and evaluated at the
infinite partition count nu, so the result is an exact series whose
standard part is the integral and whose lower-order terms are the
remainder.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .core import Gossamer, Kind, RationalLike, ZeroMagnitudeError, omega
from .polynomial import Polynomial

__all__ = [
    "ConjectureProbe",
    "PipelineStage",
    "PipelineTrace",
    "UniformRiemannSum",
    "bernoulli_number",
    "conjecture_probe",
    "definite_to_sum_pipeline",
    "divergent_integral_via_sum",
    "faulhaber",
    "integrability_check",
    "panel_asymptotic",
    "riemann_limit",
    "riemann_remainder",
    "uniform_riemann_sum",
]


@lru_cache(maxsize=None)
def _bernoulli_row(n: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; yields the B1 = +1/2 convention.
    row: list[Fraction] = []
    work = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        work[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            work[j - 1] = j * (work[j - 1] - work[j])
        row.append(work[0])
    return tuple(row)


def bernoulli_number(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = +1/2.

    That sign convention makes the power-sum closed forms include the
    upper endpoint, matching sums of the form sum_{k=1}^{n}.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    return _bernoulli_row(m)[m]


@lru_cache(maxsize=None)
def faulhaber(p: int) -> Polynomial:
    """Closed form S_p with S_p(n) = sum_{k=1}^{n} k^p; degree p+1, no constant term."""
    if p < 0:
        raise ValueError("p must be >= 0")
    coeffs = [Fraction(0)] * (p + 2)
    for j in range(p + 1):
        coeffs[p + 1 - j] = Fraction(math.comb(p + 1, j), p + 1) * bernoulli_number(j)
    return Polynomial(coeffs)


@dataclass(frozen=True)
class UniformRiemannSum:
    """A right-endpoint sum of f over a uniform partition of [0, 1] into nu panels."""

    integrand: Polynomial
    partition_count: Gossamer
    value: Gossamer

    def __post_init__(self):
        if self.partition_count.classify() is not Kind.INFINITE:
            raise ValueError(f"partition count must be infinite, got {self.partition_count}")


def _require_infinite(nu: Gossamer) -> None:
    if nu.classify() is not Kind.INFINITE:
        raise ValueError(f"partition count must be infinite, got {nu}")


def _inverse_power(nu: Gossamer, k: int) -> Gossamer:
    """nu^-k, carried at a floor deep enough to hold the intermediate.

    A plain inverse of nu^k with leading exponent E would drop the
    w^-E term whenever E exceeds the floor's depth, losing contributions
    that the final product (with exponents back above the floor) still
    needs.  Deepening the working floor by E preserves the inverse's
    tail to the same relative resolution as any other value.
    """
    power = nu ** k
    deep = power.truncation_floor - power.leading_exponent
    return Gossamer(power.terms, floor=deep, truncated=power.truncated).inverse()


def uniform_riemann_sum(f: Polynomial, nu: Optional[Gossamer] = None) -> UniformRiemannSum:
    """Evaluate sum_{j=1}^{nu} f(j/nu)*(1/nu) exactly, monomial by monomial."""
    nu = omega() if nu is None else nu
    _require_infinite(nu)
    value = Gossamer(floor=nu.truncation_floor)
    for degree, c in enumerate(f.coefficients):
        if not c:
            continue
        power_sum = faulhaber(degree).evaluate(nu)
        value = value + c * power_sum * _inverse_power(nu, degree + 1)
    return UniformRiemannSum(f, nu, value)


def riemann_limit(f: Polynomial) -> Fraction:
    """Standard part of the uniform sum at the canonical infinite count."""
    return uniform_riemann_sum(f, omega()).value.standard_part()


class RiemannRemainder(NamedTuple):
    c: Gossamer
    valid: bool


def riemann_remainder(f: Polynomial) -> RiemannRemainder:
    """The gap c between the uniform sum and the integral over [0, 1].

    Valid when c vanishes or is negligible against both sides, which is
    the decomposition behind treating the sum and the integral as
    asymptotically equal.
    """
    total = uniform_riemann_sum(f, omega()).value
    integral = Gossamer.from_rational(f.integrate(0, 1))
    if not total or not integral:
        raise ZeroMagnitudeError("remainder decomposition needs nonzero sum and integral")
    c = total - integral
    valid = (not c) or (c.much_less(total) and c.much_less(integral))
    return RiemannRemainder(c, valid)


def _scaled_integral_zero_to_nu(f: Polynomial, nu: Gossamer) -> Gossamer:
    # integral over [0, nu] of f(x/nu) dx, one monomial at a time
    total = Gossamer(floor=nu.truncation_floor)
    for degree, c in enumerate(f.coefficients):
        if not c:
            continue
        piece = (nu ** (degree + 1)) * _inverse_power(nu, degree) * Fraction(c, degree + 1)
        total = total + piece
    return total


def _unscaled_sum(f: Polynomial, nu: Gossamer) -> Gossamer:
    # sum_{j=1}^{nu} f(j/nu), without the 1/nu panel width
    total = Gossamer(floor=nu.truncation_floor)
    for degree, c in enumerate(f.coefficients):
        if not c:
            continue
        total = total + c * faulhaber(degree).evaluate(nu) * _inverse_power(nu, degree)
    return total


def integrability_check(f: Polynomial, nu: Optional[Gossamer] = None) -> bool:
    """Whether the scaled integral and the unscaled sum share their leading term."""
    nu = omega() if nu is None else nu
    _require_infinite(nu)
    lhs = _scaled_integral_zero_to_nu(f, nu)
    rhs = _unscaled_sum(f, nu)
    if not lhs or not rhs:
        raise ZeroMagnitudeError("integrability comparison needs nonzero sides")
    return lhs.asymptotic_to(rhs)


def panel_asymptotic(f: Polynomial, nu: Gossamer, j: Gossamer) -> bool:
    """Single-panel comparison: integral of f(x/nu) over [j, j+1] against f(j/nu).

    Holds for infinite j but can fail for finite j, where the panel
    integral and the sample have equal order yet different leading
    coefficients; report-only, never asserted globally.
    """
    _require_infinite(nu)
    inv_nu = _inverse_power(nu, 1)
    integral = Gossamer(floor=nu.truncation_floor)
    for degree, c in enumerate(f.coefficients):
        if not c:
            continue
        span = (j + 1) ** (degree + 1) - j ** (degree + 1)
        integral = integral + Fraction(c, degree + 1) * span * _inverse_power(nu, degree)
    sample = f.evaluate(j * inv_nu)
    if not integral or not sample:
        return integral == sample
    return integral.asymptotic_to(sample)


class PipelineStage(NamedTuple):
    stage: int
    expression: str
    value: Gossamer


class PipelineTrace(NamedTuple):
    stages: tuple[PipelineStage, ...]
    remainder: Gossamer
    remainder_negligible: bool


def definite_to_sum_pipeline(f: Polynomial, nu: Optional[Gossamer] = None) -> PipelineTrace:
    """The four-stage chain from a definite integral to a uniform sum.

    Stages 1-3 are the integral in its plain, substituted and
    scaled-out forms and agree exactly; stage 4 is the sum, which
    differs by a remainder negligible against the rest.
    """
    nu = omega() if nu is None else nu
    _require_infinite(nu)
    plain = Gossamer.from_rational(f.integrate(0, 1), floor=nu.truncation_floor)
    scaled = _scaled_integral_zero_to_nu(f, nu) * _inverse_power(nu, 1)
    total = uniform_riemann_sum(f, nu).value
    stages = (
        PipelineStage(1, "integral_0^1 f(x) dx", plain),
        PipelineStage(2, "integral_0^nu f(x/nu) d(x/nu)", scaled),
        PipelineStage(3, "integral_0^nu f(x/nu) (1/nu) dx", scaled),
        PipelineStage(4, "sum_{j=1}^{nu} f(j/nu) (1/nu)", total),
    )
    remainder = total - scaled
    negligible = (not remainder) or (not scaled) or remainder.much_less(scaled)
    return PipelineTrace(stages, remainder, negligible)


def divergent_integral_via_sum(p: int, n_symbol: Gossamer) -> Gossamer:
    """Leading behaviour of integral_1^n x^p dx at infinite n, via the sum route.

    Scales the range onto [0, 1], takes the standard part of the uniform
    sum there, and scales back: n^{p+1}/(p+1).  Asymptotic to the exact
    integral, whose lower-order endpoint term it discards.
    """
    if p < 0:
        raise ValueError("p must be >= 0")
    _require_infinite(n_symbol)
    unit_limit = riemann_limit(Polynomial.monomial(p))
    return (n_symbol ** (p + 1)) * unit_limit


class ConjectureProbe(NamedTuple):
    uniform_value: float
    tagged_value: float
    gap: float


def conjecture_probe(
    f: Polynomial, partition: Sequence[RationalLike], n: int
) -> ConjectureProbe:
    """Float comparison of the uniform n-panel sum against a refined non-uniform sum.

    Purely empirical evidence for the two sums converging together;
    reported, never asserted.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cuts = [Fraction(q) for q in partition]
    for prev, cur in zip(cuts, cuts[1:]):
        if cur <= prev:
            raise ValueError("partition must be strictly increasing")
    if cuts and (cuts[0] <= 0 or cuts[-1] >= 1):
        raise ValueError("partition points must lie strictly inside (0, 1)")
    uniform = math.fsum(f.evaluate(j / n) for j in range(1, n + 1)) / n
    edges = [0.0] + [float(q) for q in cuts] + [1.0]
    pieces = []
    for lo, hi in zip(edges, edges[1:]):
        width = (hi - lo) / n
        pieces.extend(f.evaluate(lo + i * width) * width for i in range(1, n + 1))
    tagged = math.fsum(pieces)
    return ConjectureProbe(uniform, tagged, abs(uniform - tagged))
