"""Exact univariate polynomial calculus over the rationals.

Polynomials evaluate over rationals or gossamer numbers alike, which is
what lets an accumulation function be probed with an infinitesimal
increment and differentiated exactly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from .core import Gossamer, Kind, NotInfinitesimalError, RationalLike
from .parsing import ParseError, match_term, split_terms

__all__ = [
    "FtcInverseCheck",
    "IntegralIdentity",
    "OrderSwap",
    "Polynomial",
    "ftc_inverse_check",
    "order_swap_demo",
    "scale_integral_identity",
    "shift_integral_identity",
]

Operand = Union[int, float, Fraction, Gossamer]


def _as_operand(x):
    if isinstance(x, (Gossamer, float)):
        return x
    return Fraction(x)


class Polynomial:
    """Dense rational-coefficient polynomial, coefficients indexed by degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError("degree must be non-negative")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse e.g. ``"3/2*x^2 - x + 5"``; any single letter works as the variable."""
        seen_symbol = None
        terms: list[tuple[int, Fraction]] = []
        for sign, chunk, position in split_terms(text):
            coeff, symbol, exponent = match_term(chunk, position)
            if symbol is None:
                terms.append((0, sign * coeff))
                continue
            if seen_symbol is None:
                seen_symbol = symbol
            elif symbol != seen_symbol:
                raise ParseError(
                    f"mixed variables {seen_symbol!r} and {symbol!r}", position
                )
            if exponent is None:
                exponent = Fraction(1)
            if exponent.denominator != 1 or exponent < 0:
                raise ParseError("polynomial exponents must be non-negative integers", position)
            terms.append((int(exponent), sign * (coeff if coeff is not None else Fraction(1))))
        coeffs = [Fraction(0)] * (max(d for d, _ in terms) + 1)
        for degree, coefficient in terms:
            coeffs[degree] += coefficient
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate(self, x: Operand):
        """Horner evaluation; the result type follows the argument type."""
        x = _as_operand(x)
        acc = x * 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coefficients) if i)

    def antiderivative(self) -> "Polynomial":
        """Formal antiderivative with zero constant term."""
        return Polynomial(
            [Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coefficients)]
        )

    def integrate(self, lower: Operand, upper: Operand):
        """Definite integral as a difference of antiderivative values.

        Endpoints may be gossamer numbers, so improper ranges like
        ``[1, w]`` evaluate exactly.
        """
        primitive = self.antiderivative()
        return primitive.evaluate(_as_operand(upper)) - primitive.evaluate(_as_operand(lower))

    def compose(self, inner: "Polynomial") -> "Polynomial":
        acc = Polynomial()
        for c in reversed(self.coefficients):
            acc = acc * inner + Polynomial((c,))
        return acc

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial((1,))
        for _ in range(n):
            result = result * self
        return result

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    def __eq__(self, other) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.coefficients == coerced.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    # -- rendering ------------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for degree in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[degree]
            if not c:
                continue
            if degree == 0:
                body = str(abs(c))
            else:
                unit = var if degree == 1 else f"{var}^{degree}"
                body = unit if abs(c) == 1 else f"{abs(c)}*{unit}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


class IntegralIdentity(NamedTuple):
    lhs: object
    rhs: object
    equal: bool


class FtcInverseCheck(NamedTuple):
    difference_quotient: Gossamer
    recovered: Fraction
    equal: bool


class OrderSwap(NamedTuple):
    h_first: Gossamer
    n_first: Gossamer
    differ: bool


def scale_integral_identity(
    p: Polynomial, a: RationalLike, b: RationalLike, alpha: RationalLike
) -> IntegralIdentity:
    """Both sides of the substitution x = alpha*v, checked for exact equality."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("scale factor must be nonzero")
    a, b = Fraction(a), Fraction(b)
    lhs = p.integrate(a, b)
    stretched = p.compose(Polynomial((0, alpha)))  # p(alpha*v)
    rhs = alpha * stretched.integrate(a / alpha, b / alpha)
    return IntegralIdentity(lhs, rhs, lhs == rhs)


def shift_integral_identity(
    p: Polynomial, a: RationalLike, b: RationalLike, c: RationalLike
) -> IntegralIdentity:
    """Both sides of the substitution x = v + c, checked for exact equality."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    lhs = p.integrate(a, b)
    shifted = p.compose(Polynomial((c, 1)))  # p(v + c)
    rhs = shifted.integrate(a - c, b - c)
    return IntegralIdentity(lhs, rhs, lhs == rhs)


def ftc_inverse_check(
    p: Polynomial, a: RationalLike, x: RationalLike, h: Gossamer
) -> FtcInverseCheck:
    """Differentiate the accumulation function of ``p`` with an infinitesimal step.

    Builds F with F(a) = 0, forms (F(x+h) - F(x))/h in exact gossamer
    arithmetic, and recovers the integrand value as the standard part.
    """
    if h.classify() is not Kind.INFINITESIMAL:
        raise NotInfinitesimalError(f"h must be a nonzero infinitesimal, got {h}")
    x = Fraction(x)
    accumulation = p.antiderivative()
    accumulation = accumulation - Polynomial.constant(accumulation.evaluate(Fraction(a)))
    quotient = (accumulation.evaluate(x + h) - accumulation.evaluate(x)) / h
    recovered = quotient.standard_part()
    return FtcInverseCheck(quotient, recovered, recovered == p.evaluate(x))


def order_swap_demo(p: Polynomial, x: RationalLike, h: Gossamer) -> OrderSwap:
    """The two evaluation orders of the infinitesimal-step difference quotient.

    Collapsing the step before the partition gives ``h*p(x)``; letting the
    partition refine first gives ``h * integral of p over [0, 1]``.  The
    two differ unless they happen to coincide.
    """
    if h.classify() is not Kind.INFINITESIMAL:
        raise NotInfinitesimalError(f"h must be a nonzero infinitesimal, got {h}")
    h_first = h * p.evaluate(Fraction(x))
    n_first = h * p.integrate(Fraction(0), Fraction(1))
    return OrderSwap(h_first, n_first, h_first != n_first)
