"""
Series arithmetic dispatcher.
Named entry point over the model operators for TruncatedSeries and MultiSeries.
"""

import enum
from typing import Optional, Union

from ...shared.errors import EmptyPrecision
from ..models.multi_series import MultiSeries
from ..models.truncated_series import TruncatedSeries


Series = Union[TruncatedSeries, MultiSeries]


class SeriesOp(str, enum.Enum):
    """Supported arithmetic operations."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    COMPOSE = "compose"
    RECIPROCAL = "reciprocal"
    DERIVATIVE = "derivative"


def series_arith(op: Union[SeriesOp, str], a: Series, b: Optional[Series] = None, var: int = 0) -> Series:
    """
    Apply one arithmetic operation.

    Args:
        op: operation name
        a: left operand
        b: right operand for add/sub/mul, inner series for compose
        var: differentiation variable for MultiSeries (0 is x)

    Returns:
        Result with the largest sound truncation order

    Raises:
        UnitRequired: reciprocal of a non-unit
        EmptyPrecision: result would have no known coefficient
        ValueError: malformed operand combination
    """
    op = SeriesOp(op)
    if op in (SeriesOp.ADD, SeriesOp.SUB, SeriesOp.MUL, SeriesOp.COMPOSE):
        if b is None:
            raise ValueError(f"Operation {op.value} needs two operands")
        if type(a) is not type(b):
            raise ValueError("Operands must have the same series type")
    if op == SeriesOp.ADD:
        return a + b  # type: ignore[operator]
    if op == SeriesOp.SUB:
        return a - b  # type: ignore[operator]
    if op == SeriesOp.MUL:
        return a * b  # type: ignore[operator]
    if op == SeriesOp.COMPOSE:
        if not isinstance(a, TruncatedSeries) or not isinstance(b, TruncatedSeries):
            raise ValueError("Composition is defined for series in x")
        return a.compose(b)
    if op == SeriesOp.RECIPROCAL:
        return a.reciprocal()
    if a.trunc == 0:
        raise EmptyPrecision("Derivative of a series known only to its constant term")
    if isinstance(a, TruncatedSeries):
        return a.derivative()
    return a.partial(var)
