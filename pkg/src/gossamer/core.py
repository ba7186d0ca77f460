"""Exact arithmetic on gossamer numbers.

A gossamer number is a finite series ``c1*w^e1 + c2*w^e2 + ...`` in the
formal infinite unit ``w``, with exact rational coefficients and rational
exponents kept strictly descending.  ``w^-1`` is the canonical positive
infinitesimal, ``w`` the canonical infinity, and every rational embeds as
the single term ``c*w^0``.  The ordered-field structure falls out of the
sign of the leading term.

Series are truncated below a per-value exponent floor (default -16,
overridable per value or through the ``GOSSAMER_TRUNC_FLOOR`` environment
variable).  Any operation that drops a term marks its result
``truncated``, so approximation is never silent: division expands a
geometric series and is the only operation that cannot be exact for
multi-term inputs.

Values are immutable after construction and all operations are pure, so
they can be shared freely between threads.
"""
from __future__ import annotations

import math
import os
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .parsing import ParseError, match_term, split_terms

__all__ = [
    "DEFAULT_TRUNCATION_FLOOR",
    "Gossamer",
    "InfinitePartError",
    "Kind",
    "NotInfinitesimalError",
    "ParseError",
    "ZeroMagnitudeError",
    "bounded_series_sum",
    "default_floor",
    "omega",
]

RationalLike = Union[int, Fraction]

DEFAULT_TRUNCATION_FLOOR = Fraction(-16)

_FLOOR_ENV = "GOSSAMER_TRUNC_FLOOR"


def default_floor() -> Fraction:
    """Truncation floor used when a value does not carry its own."""
    raw = os.environ.get(_FLOOR_ENV)
    if raw is None:
        return DEFAULT_TRUNCATION_FLOOR
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad {_FLOOR_ENV} value {raw!r}: expected a rational") from exc


class Kind(Enum):
    """Magnitude class of a value."""

    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    FINITE_APPRECIABLE = "finite_appreciable"
    INFINITE = "infinite"


class ZeroMagnitudeError(ValueError):
    """A magnitude relation was asked of zero, which has no leading term."""


class InfinitePartError(ValueError):
    """standard_part of a value with an infinite part: there is no real shadow."""


class NotInfinitesimalError(ValueError):
    """An operation required an infinitesimal argument."""


class Gossamer:
    """A finite series over ``w`` with rational coefficients and exponents.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs, strictly
    descending by exponent, with no zero coefficients and no exponent
    below ``truncation_floor``.  The zero value has an empty tuple.
    """

    __slots__ = ("terms", "truncation_floor", "truncated")

    def __init__(
        self,
        terms: Iterable[Tuple[RationalLike, RationalLike]] = (),
        floor: Optional[RationalLike] = None,
        truncated: bool = False,
    ):
        floor = default_floor() if floor is None else Fraction(floor)
        merged: dict[Fraction, Fraction] = {}
        for exponent, coefficient in terms:
            e = Fraction(exponent)
            c = Fraction(coefficient)
            if not c:
                continue
            merged[e] = merged.get(e, Fraction(0)) + c
        kept = []
        dropped = False
        for e in sorted(merged, reverse=True):
            c = merged[e]
            if not c:
                continue
            if e < floor:
                dropped = True
                continue
            kept.append((e, c))
        self.terms: Tuple[Tuple[Fraction, Fraction], ...] = tuple(kept)
        self.truncation_floor = floor
        self.truncated = bool(truncated or dropped)

    # -- constructors ------------------------------------------------

    @classmethod
    def from_rational(cls, value: RationalLike, floor: Optional[RationalLike] = None) -> "Gossamer":
        return cls(((Fraction(0), Fraction(value)),), floor=floor)

    @classmethod
    def parse(cls, text: str, floor: Optional[RationalLike] = None) -> "Gossamer":
        """Parse the rendering grammar, e.g. ``"1/3 + 1/2*w^-1"``."""
        pairs = []
        for sign, chunk, position in split_terms(text):
            coeff, symbol, exponent = match_term(chunk, position)
            if symbol is None:
                pairs.append((Fraction(0), sign * coeff))
                continue
            if symbol != "w":
                raise ParseError(f"unexpected symbol {symbol!r}: expected 'w'", position)
            c = coeff if coeff is not None else Fraction(1)
            e = exponent if exponent is not None else Fraction(1)
            pairs.append((e, sign * c))
        return cls(pairs, floor=floor)

    # -- structure ---------------------------------------------------

    @property
    def leading_exponent(self) -> Fraction:
        if not self.terms:
            raise ZeroMagnitudeError("zero has no leading term")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise ZeroMagnitudeError("zero has no leading term")
        return self.terms[0][1]

    def classify(self) -> Kind:
        if not self.terms:
            return Kind.ZERO
        lead = self.terms[0][0]
        if lead > 0:
            return Kind.INFINITE
        if lead == 0:
            return Kind.FINITE_APPRECIABLE
        return Kind.INFINITESIMAL

    def coefficient(self, exponent: RationalLike) -> Fraction:
        """Coefficient of ``w^exponent`` (zero when absent)."""
        e = Fraction(exponent)
        for exp, coeff in self.terms:
            if exp == e:
                return coeff
            if exp < e:
                break
        return Fraction(0)

    # -- coercion ----------------------------------------------------

    def _coerce(self, other) -> Optional["Gossamer"]:
        if isinstance(other, Gossamer):
            return other
        if isinstance(other, (int, Fraction)):
            return Gossamer(((Fraction(0), Fraction(other)),), floor=self.truncation_floor)
        return None

    # -- arithmetic --------------------------------------------------

    def __add__(self, other) -> "Gossamer":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Gossamer(
            self.terms + other.terms,
            floor=max(self.truncation_floor, other.truncation_floor),
            truncated=self.truncated or other.truncated,
        )

    __radd__ = __add__

    def __neg__(self) -> "Gossamer":
        return Gossamer(
            tuple((e, -c) for e, c in self.terms),
            floor=self.truncation_floor,
            truncated=self.truncated,
        )

    def __sub__(self, other) -> "Gossamer":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Gossamer":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Gossamer":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        products: dict[Fraction, Fraction] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = ea + eb
                products[e] = products.get(e, Fraction(0)) + ca * cb
        return Gossamer(
            products.items(),
            floor=max(self.truncation_floor, other.truncation_floor),
            truncated=self.truncated or other.truncated,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Gossamer":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Gossamer":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent) -> "Gossamer":
        if isinstance(exponent, Fraction) and exponent.denominator == 1:
            exponent = int(exponent)
        if isinstance(exponent, int):
            if exponent < 0:
                return (self ** (-exponent)).inverse()
            result = Gossamer(((Fraction(0), Fraction(1)),), floor=self.truncation_floor)
            base, n = self, exponent
            while n:
                if n & 1:
                    result = result * base
                n >>= 1
                if n:
                    base = base * base
            return result
        exponent = Fraction(exponent)
        if len(self.terms) == 1 and self.terms[0][1] == 1:
            return Gossamer(
                ((self.terms[0][0] * exponent, Fraction(1)),),
                floor=self.truncation_floor,
                truncated=self.truncated,
            )
        raise ValueError("fractional powers are defined only for unit-coefficient monomials")

    def __abs__(self) -> "Gossamer":
        if self.terms and self.terms[0][1] < 0:
            return -self
        return self

    def inverse(self, order: Optional[int] = None) -> "Gossamer":
        """Multiplicative inverse by geometric expansion.

        Writes the value as ``c*w^e*(1 + u)`` with ``u`` carrying only
        negative relative exponents and returns
        ``(1/c)*w^-e * sum_{i=0}^{order} (-u)^i``.  With ``order=None``
        the expansion runs until the dropped tail sits below the
        truncation floor, so for leading exponent e <= 0 the product
        ``a * a.inverse()`` is exactly 1 after flooring.  For infinite
        values (e > 0) the cancellation terms would live below the floor
        and cannot be stored, so the product's residue is only
        guaranteed below ``floor + e``.  Any nonzero ``u`` marks the
        result truncated.
        """
        if not self.terms:
            raise ZeroDivisionError("zero has no inverse")
        lead_exp, lead_coeff = self.terms[0]
        # Result exponents are shifted by -lead_exp, so expand relative to
        # a correspondingly shifted floor.
        floor_rel = self.truncation_floor + lead_exp
        u = Gossamer(
            tuple((e - lead_exp, c / lead_coeff) for e, c in self.terms[1:]),
            floor=floor_rel,
        )
        if not u.terms:
            return Gossamer(
                ((-lead_exp, 1 / lead_coeff),),
                floor=self.truncation_floor,
                truncated=self.truncated or u.truncated,
            )
        if order is None:
            gap = u.terms[0][0]  # < 0: the slowest-decaying part of u
            order = max(0, math.floor(floor_rel / gap))
        geometric = Gossamer(((Fraction(0), Fraction(1)),), floor=floor_rel)
        power = geometric
        minus_u = -u
        for _ in range(order):
            power = power * minus_u
            if not power.terms:
                break
            geometric = geometric + power
        return Gossamer(
            tuple((e - lead_exp, c / lead_coeff) for e, c in geometric.terms),
            floor=self.truncation_floor,
            truncated=True,
        )

    # -- order and magnitude relations --------------------------------

    def compare(self, other) -> int:
        """Sign of ``self - other``: -1, 0 or 1.  A total order extending Q."""
        other = self._coerce(other)
        if other is None:
            raise TypeError(f"cannot compare Gossamer with {type(other).__name__}")
        difference = self - other
        if not difference.terms:
            return 0
        return 1 if difference.terms[0][1] > 0 else -1

    def much_less(self, other) -> bool:
        """Infinitely smaller in magnitude: strictly smaller leading exponent."""
        other = self._coerce(other)
        if other is None or not self.terms or not other.terms:
            raise ZeroMagnitudeError("magnitude relation undefined for zero")
        return self.terms[0][0] < other.terms[0][0]

    def asymptotic_to(self, other) -> bool:
        """Identical leading term; the difference is negligible against both sides."""
        other = self._coerce(other)
        if other is None or not self.terms or not other.terms:
            raise ZeroMagnitudeError("magnitude relation undefined for zero")
        return self.terms[0] == other.terms[0]

    def infinitely_close_to(self, other) -> bool:
        """Difference is zero or infinitesimal."""
        other = self._coerce(other)
        if other is None:
            raise TypeError("expected a Gossamer or rational")
        return (self - other).classify() in (Kind.ZERO, Kind.INFINITESIMAL)

    def standard_part(self) -> Fraction:
        """The real shadow: coefficient of ``w^0``. Undefined for infinite values."""
        if self.terms and self.terms[0][0] > 0:
            raise InfinitePartError(f"no standard part: {self} has an infinite part")
        return self.coefficient(0)

    def realize(self, floor: RationalLike) -> "Gossamer":
        """Truncate terms below ``floor`` (the transfer map for floor 0)."""
        floor = Fraction(floor)
        kept = tuple((e, c) for e, c in self.terms if e >= floor)
        return Gossamer(
            kept,
            floor=max(self.truncation_floor, floor),
            truncated=self.truncated or len(kept) != len(self.terms),
        )

    def at_omega(self, value: RationalLike) -> Fraction:
        """Evaluate the series at a finite rational stand-in for ``w``.

        Useful as an oracle: closed forms derived at infinity must agree
        with direct computation at any finite substitute.  Requires
        integer exponents.
        """
        v = Fraction(value)
        total = Fraction(0)
        for e, c in self.terms:
            if e.denominator != 1:
                raise ValueError("cannot evaluate a fractional exponent at a rational stand-in")
            total += c * v ** int(e)
        return total

    # -- comparison dunders -------------------------------------------

    def __eq__(self, other) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.terms == coerced.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- rendering -----------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            body = _term_body(abs(c), e)
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        flags = ", truncated" if self.truncated else ""
        return f"Gossamer({self.to_text()!r}{flags})"


def _term_body(coefficient: Fraction, exponent: Fraction) -> str:
    if exponent == 0:
        return str(coefficient)
    unit = "w" if exponent == 1 else f"w^{exponent}"
    if coefficient == 1:
        return unit
    return f"{coefficient}*{unit}"


def omega(exponent: RationalLike = 1, floor: Optional[RationalLike] = None) -> Gossamer:
    """The infinite unit ``w`` raised to a rational power (``omega(-1)`` is 1/w)."""
    return Gossamer(((Fraction(exponent), Fraction(1)),), floor=floor)


def bounded_series_sum(
    coefficients: Sequence[RationalLike], h: Gossamer, order: int
) -> Gossamer:
    """``sum_{k=1}^{order} a_k h^k`` for infinitesimal ``h``.

    The coefficient list repeats cyclically when shorter than ``order``;
    boundedness of the list is what keeps the result infinitesimal, so
    the result always classifies as zero or infinitesimal.
    """
    coeffs = [Fraction(c) for c in coefficients]
    if not coeffs:
        raise ValueError("coefficients must be non-empty")
    if h.classify() is not Kind.INFINITESIMAL:
        raise NotInfinitesimalError(f"h must be a nonzero infinitesimal, got {h}")
    total = Gossamer(floor=h.truncation_floor)
    power = Gossamer.from_rational(1, floor=h.truncation_floor)
    for k in range(1, order + 1):
        power = power * h
        total = total + coeffs[(k - 1) % len(coeffs)] * power
    return total
