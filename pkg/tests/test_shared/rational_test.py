"""
Tests for the rational codec.
"""

from fractions import Fraction

import pytest
import sympy

from trs_flow.shared.rational import format_rational, parse_rational, to_fraction


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, Fraction(3)),
        (Fraction(1, 3), Fraction(1, 3)),
        ("-2/4", Fraction(-1, 2)),
        (" 7 ", Fraction(7)),
        (sympy.Rational(5, 6), Fraction(5, 6)),
        (sympy.Integer(-4), Fraction(-4)),
    ],
)
def test_to_fraction(value: object, expected: Fraction) -> None:
    assert to_fraction(value) == expected


@pytest.mark.parametrize("value", [0.5, True, None, "1/0", "", "x/2"])
def test_inexact_or_invalid_rejected(value: object) -> None:
    with pytest.raises(ValueError):
        to_fraction(value)


def test_format_rational() -> None:
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 9)) == "-1/3"
    assert parse_rational(format_rational(Fraction(22, 7))) == Fraction(22, 7)
