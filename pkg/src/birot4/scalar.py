"""Exact rational scalars.

Rationals are stdlib ``fractions.Fraction`` values: arbitrary-precision,
always stored in lowest terms with a positive denominator, and zero is
canonically 0/1.  This module pins down the textual interface (parse and
print round-trip bit-exactly) and a three-way comparison helper.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_MINUS_VARIANTS = ("−", "–")  # unicode minus / en-dash, seen in display text


def rational(numerator: int, denominator: int = 1) -> Rational:
    """Build a rational; raises ZeroDivisionError on a zero denominator."""
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Rational:
    """Parse "p/q" or "p" (base-10, optional sign) into a Rational.

    Unicode minus signs are normalized; whitespace around the number and
    the slash is ignored.  Raises ValueError on anything else.
    """
    cleaned = text.strip()
    for variant in _MINUS_VARIANTS:
        cleaned = cleaned.replace(variant, "-")
    if "/" in cleaned:
        num_text, _, den_text = cleaned.partition("/")
        try:
            num = int(num_text.strip())
            den = int(den_text.strip())
        except ValueError as exc:
            raise ValueError(f"not a rational literal: {text!r}") from exc
        if den == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(num, den)
    try:
        return Fraction(int(cleaned))
    except ValueError as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Rational) -> str:
    """Canonical text: "p/q" in lowest terms, or plain "p" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def compare(a: Rational, b: Rational) -> int:
    """Three-way comparison: -1, 0, or +1."""
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def sign(value: Rational) -> int:
    """Sign of a rational: -1, 0, or +1."""
    return compare(value, Fraction(0))
