#!/usr/bin/env python3
"""Walk the divergent-integral chain for x^p from 1 to an infinite bound.

Shows each stage exactly: the scaled unit-interval sum, its standard
part, the leading closed form, and the exact integral it is asymptotic
to.

Usage: python scripts/divergent_integral_demo.py [--power 2]
"""
import argparse

from gossamer import (
    Polynomial,
    divergent_integral_via_sum,
    omega,
    riemann_limit,
    uniform_riemann_sum,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--power", type=int, default=2)
    args = parser.parse_args()

    p = args.power
    mono = Polynomial.monomial(p)
    unit_sum = uniform_riemann_sum(mono).value
    leading = divergent_integral_via_sum(p, omega())
    exact = mono.integrate(1, omega())
    print(f"integrand: x^{p}, upper bound: the infinite unit w")
    print(f"  uniform sum of x^{p} over [0,1] at count w : {unit_sum}")
    print(f"  standard part of that sum                 : {riemann_limit(mono)}")
    print(f"  scaled back by w^{p + 1}                      : {leading}")
    print(f"  exact integral from 1 to w                : {exact}")
    print(f"  asymptotically equal                      : {leading.asymptotic_to(exact)}")


if __name__ == "__main__":
    main()
