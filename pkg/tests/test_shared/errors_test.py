"""
Tests for the error hierarchy and exit codes.
"""

import pytest

from trs_flow.shared.errors import (
    EXIT_PRECISION,
    EXIT_PRECONDITION,
    EXIT_UNDECIDABLE,
    EmptyPrecision,
    Escape,
    FuelExhausted,
    InsufficientPrecision,
    InvarianceViolated,
    NotDivisible,
    Obstruction,
    TangentUndefined,
    TrsFlowError,
    Undecidable,
)


@pytest.mark.parametrize(
    "error, code",
    [
        (NotDivisible("x"), EXIT_PRECONDITION),
        (InvarianceViolated("x"), EXIT_PRECONDITION),
        (EmptyPrecision("x"), EXIT_PRECISION),
        (InsufficientPrecision("x"), EXIT_PRECISION),
        (FuelExhausted("x"), EXIT_PRECISION),
        (Undecidable("x"), EXIT_UNDECIDABLE),
    ],
)
def test_exit_codes(error: TrsFlowError, code: int) -> None:
    assert error.exit_code == code


def test_errors_are_value_errors() -> None:
    with pytest.raises(ValueError):
        raise NotDivisible("constant term vanishes")


def test_errors_carry_their_location() -> None:
    assert Obstruction(3).order == 3
    assert "order 3" in str(Obstruction(3))
    escape = Escape(0.125)
    assert escape.x_star == 0.125
    assert "x=0.125" in str(escape)
    assert TangentUndefined(2, "no limit").level == 2
    assert str(TangentUndefined(2, "no limit")) == "no limit"
