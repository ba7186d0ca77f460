#!/usr/bin/env python3
"""Refinement sweep: uniform vs non-uniform tagged Riemann sums.

Empirical evidence that the two sums converge together as the panel
count grows; printed as a table, asserted nowhere.

Usage: python scripts/conjecture_sweep.py [--poly "x^2"] [--max-exp 14]
"""
import argparse
from fractions import Fraction

from gossamer import Polynomial, conjecture_probe


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--poly", default="x^2")
    parser.add_argument("--max-exp", type=int, default=14)
    args = parser.parse_args()

    f = Polynomial.parse(args.poly)
    partition = (Fraction(1, 3), Fraction(1, 2), Fraction(7, 8))
    exact = float(f.integrate(0, 1))
    print(f"f = {f};  exact integral over [0,1] = {exact!r}")
    print(f"non-uniform partition: {tuple(str(q) for q in partition)}")
    print(f"{'n':>8} {'uniform':>22} {'tagged':>22} {'gap':>12}")
    for k in range(4, args.max_exp + 1):
        probe = conjecture_probe(f, partition, 2 ** k)
        print(
            f"{2 ** k:>8} {probe.uniform_value:>22.12f} "
            f"{probe.tagged_value:>22.12f} {probe.gap:>12.3e}"
        )


if __name__ == "__main__":
    main()
