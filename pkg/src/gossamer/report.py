"""Randomized verification suites with deterministic, machine-readable reports.

Each suite draws its cases from a seeded generator and re-checks the
library's identities from scratch (brute-force sums, both sides of each
equality), so a report is evidence, not a restatement.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Tuple

from .core import Gossamer, Kind, bounded_series_sum, omega
from .polynomial import (
    Polynomial,
    ftc_inverse_check,
    order_swap_demo,
    scale_integral_identity,
    shift_integral_identity,
)
from .riemann import (
    conjecture_probe,
    definite_to_sum_pipeline,
    divergent_integral_via_sum,
    faulhaber,
    integrability_check,
    riemann_limit,
    uniform_riemann_sum,
)
from .steps import (
    BridgeShape,
    StepFunction,
    area_delta,
    smooth,
    smoothed_area,
    transfer_to_real,
    trapezoid_discontinuity_budget,
)
from .sums import (
    indefinite_sum,
    sum_ftc,
    sum_ftc_half_open,
    sum_interval_bruteforce,
    sum_to_integral_bridge,
)

__all__ = ["CaseResult", "SUITE_NAMES", "VerificationReport", "run_suite"]

SUITE_NAMES = ("gossamer-axioms", "riemann", "ftc", "sum-ftc", "smoothing")


@dataclass(frozen=True)
class CaseResult:
    id: str
    inputs: str
    expected: str
    actual: str
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    cases: Tuple[CaseResult, ...]
    passed: int
    failed: int
    duration: float

    def __post_init__(self):
        object.__setattr__(self, "cases", tuple(sorted(self.cases, key=lambda c: c.id)))
        if self.passed != sum(c.passed for c in self.cases) or self.failed != sum(
            not c.passed for c in self.cases
        ):
            raise ValueError("summary counts do not match the case tallies")

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_json_dict(self, include_timing: bool = False) -> dict:
        # Timing is excluded by default so identical (suite, seed, cases)
        # runs serialize byte-identically.
        return {
            "suite": self.suite,
            "cases": [
                {
                    "id": c.id,
                    "inputs": c.inputs,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed,
                }
                for c in self.cases
            ],
            "summary": {
                "passed": self.passed,
                "failed": self.failed,
                "duration": self.duration if include_timing else None,
            },
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        cases = tuple(
            CaseResult(c["id"], c["inputs"], c["expected"], c["actual"], c["pass"])
            for c in data["cases"]
        )
        duration = data["summary"]["duration"]
        return cls(
            data["suite"],
            cases,
            data["summary"]["passed"],
            data["summary"]["failed"],
            0.0 if duration is None else duration,
        )


def _case(suite: str, index: int, inputs: str, checks: list[tuple[str, bool]]) -> CaseResult:
    failed = [name for name, ok in checks if not ok]
    return CaseResult(
        id=f"{suite}-{index:04d}",
        inputs=inputs,
        expected="all checks hold",
        actual="ok" if not failed else "failed: " + ", ".join(failed),
        passed=not failed,
    )


# -- random generators ----------------------------------------------------


def _fraction(rng, lo=-100, hi=100, max_den=12) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def _nonzero_fraction(rng, lo=1, hi=12, max_den=6) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den)) * rng.choice((-1, 1))


def _poly(rng, max_degree, lo=-20, hi=20, max_den=6) -> Polynomial:
    degree = rng.randint(0, max_degree)
    return Polynomial([_fraction(rng, lo, hi, max_den) for _ in range(degree + 1)])


def _gossamer(rng, max_terms=3) -> Gossamer:
    # Exponents stay within [-2, 2] so that triple products in the axiom
    # checks cannot cross the default truncation floor.
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        terms.append((Fraction(rng.randint(-4, 4), 2), _fraction(rng, -20, 20, 6)))
    return Gossamer(terms)


def _step_function(rng, max_jumps=10) -> StepFunction:
    count = rng.randint(0, max_jumps)
    points: set[Fraction] = set()
    while len(points) < count:
        points.add(Fraction(rng.randint(-60, 60), rng.choice((1, 2, 3))))
    levels = [Fraction(rng.randint(-100, 100), rng.randint(1, 4)) for _ in range(count + 1)]
    return StepFunction(tuple(sorted(points)), tuple(levels))


# -- suites ----------------------------------------------------------------


def _suite_gossamer_axioms(rng: random.Random, cases: int) -> list[CaseResult]:
    out = []
    for i in range(cases):
        a, b, c = _gossamer(rng), _gossamer(rng), _gossamer(rng)
        p, q = _fraction(rng), _fraction(rng)
        checks = [
            ("add-assoc", (a + b) + c == a + (b + c)),
            ("add-comm", a + b == b + a),
            ("mul-assoc", (a * b) * c == a * (b * c)),
            ("mul-comm", a * b == b * a),
            ("distributivity", a * (b + c) == a * b + a * c),
            ("add-inverse", a - a == 0),
            (
                "rational-embedding",
                Gossamer.from_rational(p) + Gossamer.from_rational(q) == p + q
                and Gossamer.from_rational(p) * Gossamer.from_rational(q) == p * q,
            ),
        ]
        if a:
            # Cancellation reaches the floor itself only for leading
            # exponent <= 0; for infinite values the residue is bounded
            # below floor + leading exponent instead.
            residue = a * a.inverse() - 1
            bound = a.truncation_floor + max(a.leading_exponent, 0)
            checks.append(("mul-inverse", (not residue) or residue.leading_exponent < bound))
        if a.compare(b) < 0:
            checks.append(("order-translation", (a + c).compare(b + c) < 0))
        if a.compare(0) > 0 and b.compare(0) > 0:
            checks.append(("positive-product", (a * b).compare(0) > 0))
        if a.classify() is not Kind.INFINITE and b.classify() is not Kind.INFINITE:
            checks.append(
                ("st-additive", (a + b).standard_part() == a.standard_part() + b.standard_part())
            )
            checks.append(
                ("st-multiplicative", (a * b).standard_part() == a.standard_part() * b.standard_part())
            )
        if a and b:
            flags = (a.much_less(b), b.much_less(a), a.leading_exponent == b.leading_exponent)
            checks.append(("magnitude-trichotomy", sum(flags) == 1))
            if a.asymptotic_to(b):
                d = b - a
                checks.append(
                    ("asymptotic-decomposition", (not d) or (d.much_less(a) and d.much_less(b)))
                )
        series_coeffs = [_fraction(rng, -9, 9, 3) for _ in range(rng.randint(1, 5))]
        h = omega(rng.choice((-1, -3)))
        total = bounded_series_sum(series_coeffs, h, rng.randint(1, 8))
        checks.append(
            ("series-sum-infinitesimal", total.classify() in (Kind.ZERO, Kind.INFINITESIMAL))
        )
        out.append(_case("gossamer-axioms", i, f"a={a}; b={b}; c={c}", checks))
    return out


def _suite_riemann(rng: random.Random, cases: int) -> list[CaseResult]:
    out = []
    for i in range(cases):
        f = _poly(rng, 6)
        g = _poly(rng, 6)
        alpha = _nonzero_fraction(rng)
        p = rng.randint(0, 8)
        n = rng.randint(1, 60)
        trace = definite_to_sum_pipeline(f)
        checks = [
            ("limit-equals-integral", riemann_limit(f) == f.integrate(0, 1)),
            (
                "sum-linearity",
                uniform_riemann_sum(alpha * f + g).value
                == alpha * uniform_riemann_sum(f).value + uniform_riemann_sum(g).value,
            ),
            (
                "faulhaber-oracle",
                faulhaber(p).evaluate(Fraction(n))
                == sum((Fraction(k) ** p for k in range(1, n + 1)), Fraction(0)),
            ),
            ("pipeline-stages-1-3", trace.stages[0].value == trace.stages[1].value == trace.stages[2].value),
            ("pipeline-standard-part", trace.stages[3].value.standard_part() == trace.stages[0].value.standard_part()),
            ("pipeline-remainder", trace.remainder_negligible),
            (
                "partition-width-freedom",
                uniform_riemann_sum(f, omega(2)).value.standard_part()
                == uniform_riemann_sum(f).value.standard_part(),
            ),
            (
                "divergent-integral",
                divergent_integral_via_sum(p, omega()).asymptotic_to(
                    Polynomial.monomial(p).integrate(1, omega())
                ),
            ),
        ]
        total = uniform_riemann_sum(f).value
        integral = f.integrate(0, 1)
        if total and integral:
            remainder = total - Gossamer.from_rational(integral)
            checks.append(
                (
                    "remainder-negligible",
                    (not remainder)
                    or (remainder.much_less(total) and remainder.leading_exponent <= -1),
                )
            )
            checks.append(("integrability", integrability_check(f)))
        out.append(_case("riemann", i, f"f={f}; alpha={alpha}; p={p}; n={n}", checks))
    probe = conjecture_probe(
        Polynomial.parse("x^2"), (Fraction(1, 3), Fraction(1, 2), Fraction(7, 8)), 2 ** 14
    )
    out.append(
        CaseResult(
            id="riemann-conjecture-probe",
            inputs="f=x^2; partition=(1/3, 1/2, 7/8); n=2^14",
            expected="report-only, never asserted",
            actual=f"uniform={probe.uniform_value!r}; tagged={probe.tagged_value!r}; gap={probe.gap!r}",
            passed=True,
        )
    )
    return out


def _suite_ftc(rng: random.Random, cases: int) -> list[CaseResult]:
    out = []
    for i in range(cases):
        antiderivative = _poly(rng, 8)
        f = _poly(rng, 6)
        g = _poly(rng, 6)
        a, b = sorted((_fraction(rng), _fraction(rng)))
        mid = _fraction(rng)
        x = _fraction(rng, -10, 10, 4)
        alpha = _nonzero_fraction(rng)
        shift = _fraction(rng)
        inverse_check = ftc_inverse_check(f, a, x, omega(-1))
        swap = order_swap_demo(f, x, omega(-1))
        checks = [
            (
                "ftc",
                antiderivative.derivative().integrate(a, b)
                == antiderivative.evaluate(b) - antiderivative.evaluate(a),
            ),
            ("ftc-inverse", inverse_check.equal),
            ("ftc-inverse-value", inverse_check.recovered == f.evaluate(x)),
            ("scaling-identity", scale_integral_identity(f, a, b, alpha).equal),
            ("shifting-identity", shift_integral_identity(f, a, b, shift).equal),
            (
                "linearity",
                (alpha * f + g).integrate(a, b)
                == alpha * f.integrate(a, b) + g.integrate(a, b),
            ),
            (
                "range-additivity",
                f.integrate(a, mid) + f.integrate(mid, b) == f.integrate(a, b),
            ),
            (
                "order-swap-consistency",
                swap.differ == (f.evaluate(x) != f.integrate(0, 1)),
            ),
        ]
        out.append(_case("ftc", i, f"F={antiderivative}; f={f}; a={a}; b={b}; x={x}", checks))
    return out


def _suite_sum_ftc(rng: random.Random, cases: int) -> list[CaseResult]:
    out = []
    for i in range(cases):
        g = _poly(rng, 6, lo=-20, hi=20, max_den=4)
        a = rng.randint(0, 100)
        b = rng.randint(a, 100)
        c = rng.randint(b + 1, b + 40)
        n = rng.randint(1, 100)
        p = rng.randint(0, 8)
        closed = indefinite_sum(g)
        half = sum_ftc_half_open(g, a, b)
        half_oracle = (
            sum_interval_bruteforce(g, a + 1, b) if a + 1 <= b else Fraction(0)
        )
        symbolic = sum_ftc(g, 1, omega()).value
        checks = [
            ("closed-vs-brute", sum_ftc(g, a, b).value == sum_interval_bruteforce(g, a, b)),
            ("oracle-flag", sum_ftc(g, a, b).oracle_match),
            (
                "telescoping",
                closed.point_function.evaluate(Fraction(n))
                - closed.point_function.evaluate(Fraction(n - 1))
                == g.evaluate(Fraction(n)),
            ),
            (
                "additivity",
                sum_ftc(g, a, b).value + sum_ftc(g, b + 1, c).value == sum_ftc(g, a, c).value,
            ),
            ("half-open-convention", half.value == half_oracle),
            (
                "faulhaber-consistency",
                indefinite_sum(Polynomial.monomial(p)).point_function == faulhaber(p),
            ),
            (
                "infinite-endpoint-substitution",
                symbolic.at_omega(n) == sum_interval_bruteforce(g, 1, n),
            ),
            ("bridge", sum_to_integral_bridge(g, a, b).equal),
        ]
        out.append(_case("sum-ftc", i, f"g={g.to_text('k')}; a={a}; b={b}; c={c}", checks))
    return out


def _suite_smoothing(rng: random.Random, cases: int) -> list[CaseResult]:
    out = []
    shapes = tuple(BridgeShape)
    epsilons = (omega(-1), omega(-2), omega(-5))
    for i in range(cases):
        step = _step_function(rng)
        if step.breakpoints:
            a = min(step.breakpoints) - 1
            b = max(step.breakpoints) + 1
        else:
            a, b = Fraction(-1), Fraction(1)
        shape = shapes[i % len(shapes)]
        eps = epsilons[i % len(epsilons)]
        smoothed = smooth(step, shape, eps)
        checks = [
            ("area-preservation", area_delta(step, smoothed, a, b).infinitesimal),
            (
                "transfer-area-commutation",
                smoothed_area(smoothed, a, b).standard_part() == step.area(a, b),
            ),
            ("round-trip", transfer_to_real(smoothed) == step),
        ]
        budget = trapezoid_discontinuity_budget(step, eps)
        checks.append(("budget-infinitesimal", budget.infinitesimal))
        checks.append(
            (
                "budget-linear-scaling",
                trapezoid_discontinuity_budget(step, 3 * eps).total == 3 * budget.total,
            )
        )
        for q, lo, hi in step.jumps():
            checks.append(
                (
                    f"continuity-at-{q}",
                    smoothed.value_at(Gossamer.from_rational(q) - eps) == lo
                    and smoothed.value_at(Gossamer.from_rational(q) + eps) == hi
                    and smoothed.value_at(Gossamer.from_rational(q)) == Fraction(lo + hi, 2),
                )
            )
            break  # one bridge per case keeps the suite fast
        out.append(
            _case(
                "smoothing",
                i,
                f"jumps={len(step.breakpoints)}; shape={shape.value}; eps={eps}",
                checks,
            )
        )
    return out


_SUITES: dict[str, Callable[[random.Random, int], list[CaseResult]]] = {
    "gossamer-axioms": _suite_gossamer_axioms,
    "riemann": _suite_riemann,
    "ftc": _suite_ftc,
    "sum-ftc": _suite_sum_ftc,
    "smoothing": _suite_smoothing,
}


def run_suite(name: str, seed: int = 0, cases: int = 100) -> VerificationReport:
    """Run a named suite (or 'all') with deterministic pseudo-randomness."""
    start = time.perf_counter()
    if name == "all":
        results: list[CaseResult] = []
        for sub in SUITE_NAMES:
            results.extend(_SUITES[sub](random.Random(seed), cases))
    elif name in _SUITES:
        results = _SUITES[name](random.Random(seed), cases)
    else:
        choices = ", ".join(SUITE_NAMES + ("all",))
        raise ValueError(f"unknown suite {name!r}; choose one of: {choices}")
    duration = time.perf_counter() - start
    return VerificationReport(
        suite=name,
        cases=tuple(results),
        passed=sum(c.passed for c in results),
        failed=sum(not c.passed for c in results),
        duration=duration,
    )
