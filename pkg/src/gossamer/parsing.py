"""Tokenizer shared by the series and polynomial text grammars.

Both grammars are flat linear combinations: terms joined by top-level
``+``/``-``, each term an optional rational coefficient, an optional
``*``, an optional single-letter symbol and an optional ``^exponent``
with the exponent itself a rational.  Examples:

    1/3 + 1/2*w^-1
    3/2*x^2 - x + 5
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional


class ParseError(ValueError):
    """Malformed expression text; ``position`` is the character offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TERM_RE = re.compile(
    r"""^
    (?P<sign>[+-])?\s*
    (?P<coeff>\d+(?:\s*/\s*\d+)?)?
    \s*(?P<star>\*)?\s*
    (?P<symbol>[A-Za-z])?
    (?:\^(?P<exp>[+-]?\d+(?:/\d+)?))?
    $""",
    re.VERBOSE,
)


def split_terms(text: str) -> list[tuple[int, str, int]]:
    """Split on top-level +/- and return (sign, term_text, position) triples.

    A +/- is an operator only when some term content precedes it and the
    last significant character is not ^, * or / (so "w^-1" and "-2" stay
    intact).
    """
    terms: list[tuple[int, str, int]] = []
    sign = 1
    start = 0
    prev = ""
    content = False
    for i, ch in enumerate(text):
        if ch in "+-" and content and prev not in "^*/":
            terms.append((sign, text[start:i].strip(), start))
            sign = 1 if ch == "+" else -1
            start = i + 1
            prev = ""
            content = False
            continue
        if not ch.isspace():
            prev = ch
            content = True
    tail = text[start:].strip()
    if not tail:
        raise ParseError("dangling operator" if terms else "empty expression", start)
    terms.append((sign, tail, start))
    return terms


def match_term(chunk: str, position: int) -> tuple[Optional[Fraction], Optional[str], Optional[Fraction]]:
    """Parse one term into (coefficient, symbol, exponent), any of which may be absent."""
    m = _TERM_RE.match(chunk.strip())
    if m is None or (m.group("coeff") is None and m.group("symbol") is None):
        raise ParseError(
            f"expected a term such as '3/2', 'w' or '2*w^-1', got {chunk!r}", position
        )
    if m.group("exp") is not None and m.group("symbol") is None:
        raise ParseError("expected a symbol before '^'", position)
    if m.group("star") and (m.group("coeff") is None or m.group("symbol") is None):
        raise ParseError("expected '*' to join a coefficient and a symbol", position)
    sign = -1 if m.group("sign") == "-" else 1
    coeff = None
    if m.group("coeff") is not None:
        coeff = sign * Fraction(m.group("coeff").replace(" ", ""))
    elif m.group("sign") is not None:
        coeff = Fraction(sign)
    exponent = Fraction(m.group("exp")) if m.group("exp") is not None else None
    return coeff, m.group("symbol"), exponent
