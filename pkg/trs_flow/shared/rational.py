"""
Rational codec.
Exact coefficients travel through JSON as "p/q" strings.
"""

from fractions import Fraction
from typing import Any


def to_fraction(value: Any) -> Fraction:
    """
    Coerce an int, Fraction, "p/q" string or sympy Rational to Fraction.

    Floats are rejected: symbolic modules never accept inexact coefficients.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("Booleans are not rational coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise ValueError(f"Float coefficient {value!r} is not exact; pass a 'p/q' string")
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is not None and denominator is not None:
        # sympy Rational exposes p/q as properties, domain elements as attributes
        num = numerator() if callable(numerator) else numerator
        den = denominator() if callable(denominator) else denominator
        return Fraction(int(num), int(den))
    raise ValueError(f"Cannot interpret {value!r} as a rational number")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction in lowest terms."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("Empty rational literal")
    try:
        return Fraction(stripped)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid rational literal {text!r}") from e


def format_rational(value: Fraction) -> str:
    """Format a Fraction as "p/q" (or "p" when integral)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
