"""Command-line front end: verification suites and demo computations.

Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .core import Gossamer, ParseError, omega
from .polynomial import Polynomial, ftc_inverse_check
from .report import SUITE_NAMES, run_suite
from .riemann import (
    definite_to_sum_pipeline,
    panel_asymptotic,
    riemann_remainder,
    uniform_riemann_sum,
)
from .steps import (
    LOGISTIC_SHAPE,
    BridgeShape,
    StepFunction,
    area_delta,
    sample_curve,
    smooth,
    smoothed_area,
    transfer_to_real,
    trapezoid_discontinuity_budget,
)
from .sums import indefinite_sum, sum_ftc

USAGE_EXIT = 2

_SHAPE_ALIASES = {
    "linear": BridgeShape.LINEAR,
    "cubic": BridgeShape.CUBIC_SMOOTHSTEP,
    "cubic_smoothstep": BridgeShape.CUBIC_SMOOTHSTEP,
    "quintic": BridgeShape.QUINTIC_SMOOTHSTEP,
    "quintic_smoothstep": BridgeShape.QUINTIC_SMOOTHSTEP,
}


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational, got {text!r}") from exc


def _endpoint_arg(text: str) -> Gossamer:
    """An integer, or a gossamer expression such as 'w' for an infinite endpoint."""
    try:
        return Gossamer.from_rational(int(text))
    except ValueError:
        pass
    try:
        return Gossamer.parse(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gossamer",
        description="Exact infinitesimal arithmetic: verification suites and demos.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", default="all", choices=SUITE_NAMES + ("all",))
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--cases", type=int, default=100)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--timing", action="store_true", help="include duration in JSON")

    riemann = sub.add_parser("riemann", help="uniform Riemann sum of a polynomial at infinity")
    riemann.add_argument("--poly", required=True)
    riemann.add_argument("--nu-exp", type=_fraction_arg, default=Fraction(1))
    riemann.add_argument("--json", action="store_true")

    ftc = sub.add_parser("ftc", help="difference quotient of an accumulation function")
    ftc.add_argument("--poly", required=True)
    ftc.add_argument("--a", type=_fraction_arg, default=Fraction(0))
    ftc.add_argument("--x", type=_fraction_arg, required=True)
    ftc.add_argument("--h-exp", type=_fraction_arg, default=Fraction(-1))
    ftc.add_argument("--json", action="store_true")

    sums = sub.add_parser("sum", help="closed-form summation with brute-force oracle")
    sums.add_argument("--term", required=True)
    sums.add_argument("--from", dest="start", type=_endpoint_arg, required=True)
    sums.add_argument("--to", dest="end", type=_endpoint_arg, required=True)
    sums.add_argument("--json", action="store_true")

    smooth_cmd = sub.add_parser("smooth", help="continuous representation of a step function")
    smooth_cmd.add_argument("--input", required=True, help="step function JSON file")
    smooth_cmd.add_argument(
        "--shape", default="linear", choices=sorted(_SHAPE_ALIASES) + [LOGISTIC_SHAPE]
    )
    smooth_cmd.add_argument("--eps-exp", type=_fraction_arg, default=Fraction(-1))
    smooth_cmd.add_argument("--from", dest="start", type=_fraction_arg, default=None)
    smooth_cmd.add_argument("--to", dest="end", type=_fraction_arg, default=None)
    smooth_cmd.add_argument("--emit-csv", metavar="PATH", default=None)
    smooth_cmd.add_argument("--samples", type=int, default=201)
    smooth_cmd.add_argument(
        "--standin-width",
        type=float,
        default=None,
        help="finite half-width used only for CSV sampling",
    )
    smooth_cmd.add_argument("--json", action="store_true")

    pipeline = sub.add_parser("pipeline", help="integral-to-sum transformation trace")
    pipeline.add_argument("--poly", required=True)
    pipeline.add_argument("--nu-exp", type=_fraction_arg, default=Fraction(1))

    return parser


def _emit(payload: dict, as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, cases=args.cases)
    if args.json:
        print(report.to_json(include_timing=args.timing))
    else:
        for case in report.cases:
            if not case.passed:
                print(f"FAIL {case.id}: {case.actual} (inputs: {case.inputs})")
        print(
            f"suite={report.suite} passed={report.passed} failed={report.failed} "
            f"duration={report.duration:.2f}s"
        )
    return 0 if report.all_passed else 1


def _cmd_riemann(args) -> int:
    f = Polynomial.parse(args.poly)
    if args.nu_exp <= 0:
        raise ParseError("--nu-exp must be positive so the partition count is infinite", 0)
    nu = omega(args.nu_exp)
    total = uniform_riemann_sum(f, nu).value
    st = total.standard_part()
    payload = {
        "poly": f.to_text(),
        "nu": str(nu),
        "sum": str(total),
        "standard_part": str(st),
        "integral_0_1": str(f.integrate(0, 1)),
    }
    if total and f.integrate(0, 1):
        remainder = riemann_remainder(f)
        payload["remainder"] = str(remainder.c)
        payload["remainder_negligible"] = remainder.valid
    # The single-panel condition sampled at a finite, a mid-range and a
    # near-top panel; informational (it can fail at finite panels).
    payload["panel_asymptotic"] = {
        "j=1": panel_asymptotic(f, nu, Gossamer.from_rational(1)),
        "j=nu/2": panel_asymptotic(f, nu, nu * Fraction(1, 2)),
        "j=nu-1": panel_asymptotic(f, nu, nu - 1),
    }
    _emit(payload, args.json, [f"sum = {total}; st = {st}"])
    return 0 if st == f.integrate(0, 1) else 1


def _cmd_ftc(args) -> int:
    f = Polynomial.parse(args.poly)
    if args.h_exp >= 0:
        raise ParseError("--h-exp must be negative so the step is infinitesimal", 0)
    h = omega(args.h_exp)
    check = ftc_inverse_check(f, args.a, args.x, h)
    payload = {
        "poly": f.to_text(),
        "a": str(args.a),
        "x": str(args.x),
        "h": str(h),
        "difference_quotient": str(check.difference_quotient),
        "recovered": str(check.recovered),
        "equal": check.equal,
    }
    _emit(
        payload,
        args.json,
        [
            f"quotient = {check.difference_quotient}; "
            f"recovered = {check.recovered}; equal = {str(check.equal).lower()}"
        ],
    )
    return 0 if check.equal else 1


def _cmd_sum(args) -> int:
    g = Polynomial.parse(args.term)
    closed = indefinite_sum(g)
    result = sum_ftc(g, args.start, args.end)
    payload = {
        "term": g.to_text("k"),
        "from": str(args.start),
        "to": str(args.end),
        "closed_form": closed.point_function.to_text("n"),
        "value": str(result.value),
        "oracle": "brute-force accumulation" if result.oracle_match else "mismatch",
        "match": result.oracle_match,
    }
    _emit(
        payload,
        args.json,
        [
            f"closed_form = {closed.point_function.to_text('n')}",
            f"value = {result.value}; oracle match = {str(result.oracle_match).lower()}",
        ],
    )
    return 0 if result.oracle_match else 1


def _default_standin(step: StepFunction) -> float:
    gaps = [
        float(b - a) for a, b in zip(step.breakpoints, step.breakpoints[1:])
    ]
    return min(gaps) / 8 if gaps else 0.25


def _cmd_smooth(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        step = StepFunction.from_json(fh.read())
    if args.eps_exp >= 0:
        raise ParseError("--eps-exp must be negative so the half-width is infinitesimal", 0)
    if step.breakpoints:
        lo = min(step.breakpoints) - 1 if args.start is None else args.start
        hi = max(step.breakpoints) + 1 if args.end is None else args.end
    else:
        lo = Fraction(-1) if args.start is None else args.start
        hi = Fraction(1) if args.end is None else args.end

    if args.emit_csv:
        if args.samples < 2:
            raise ParseError("--samples must be at least 2", 0)
        width = args.standin_width or _default_standin(step)
        xs = [float(lo) + (float(hi) - float(lo)) * i / (args.samples - 1) for i in range(args.samples)]
        ys = sample_curve(step, args.shape if args.shape == LOGISTIC_SHAPE else _SHAPE_ALIASES[args.shape], width, xs)
        with open(args.emit_csv, "w", encoding="utf-8") as fh:
            fh.write(
                f"# smoothed step function; shape={args.shape}; eps=w^{args.eps_exp} "
                f"rendered at finite stand-in half-width {width}\n"
            )
            fh.write("x,y\n")
            for x, y in zip(xs, ys):
                fh.write(f"{x!r},{y!r}\n")

    if args.shape == LOGISTIC_SHAPE:
        if not args.emit_csv:
            raise ParseError("the logistic shape is sampling-only; pass --emit-csv", 0)
        print(f"wrote {args.emit_csv} (logistic shape: no exact-area claims)")
        return 0

    eps = omega(args.eps_exp)
    smoothed = smooth(step, _SHAPE_ALIASES[args.shape], eps)
    delta = area_delta(step, smoothed, lo, hi)
    budget = trapezoid_discontinuity_budget(step, eps)
    round_trip = transfer_to_real(smoothed) == step
    payload = {
        "input": step.to_json_dict(),
        "shape": _SHAPE_ALIASES[args.shape].value,
        "eps": str(eps),
        "interval": [str(lo), str(hi)],
        "area": str(step.area(lo, hi)),
        "smoothed_area": str(smoothed_area(smoothed, lo, hi)),
        "area_delta": str(delta.delta),
        "delta_infinitesimal": delta.infinitesimal,
        "budget_per_bridge": [str(piece) for piece in budget.per_bridge],
        "budget_total": str(budget.total),
        "budget_infinitesimal": budget.infinitesimal,
        "round_trip_identity": round_trip,
    }
    _emit(
        payload,
        args.json,
        [f"area_delta = {delta.delta}, budget = {budget.total}"],
    )
    return 0 if delta.infinitesimal and budget.infinitesimal and round_trip else 1


def _cmd_pipeline(args) -> int:
    f = Polynomial.parse(args.poly)
    if args.nu_exp <= 0:
        raise ParseError("--nu-exp must be positive so the partition count is infinite", 0)
    trace = definite_to_sum_pipeline(f, omega(args.nu_exp))
    payload = {
        "poly": f.to_text(),
        "nu": str(omega(args.nu_exp)),
        "stages": [
            {"stage": s.stage, "expression": s.expression, "value": str(s.value)}
            for s in trace.stages
        ],
        "remainder": str(trace.remainder),
        "remainder_negligible": trace.remainder_negligible,
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if trace.remainder_negligible else 1


_COMMANDS = {
    "verify": _cmd_verify,
    "riemann": _cmd_riemann,
    "ftc": _cmd_ftc,
    "sum": _cmd_sum,
    "smooth": _cmd_smooth,
    "pipeline": _cmd_pipeline,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
