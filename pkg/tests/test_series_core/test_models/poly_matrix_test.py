"""
Tests for the PolyMatrix model.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.series_core.models.truncated_series import TruncatedSeries
from trs_flow.shared.errors import NotRegular, ShapeError


def test_from_rows_truncates_to_smallest_trunc() -> None:
    m = PolyMatrix.from_rows([[TruncatedSeries.make([1, 2, 3], 2), TruncatedSeries.make([0], 4)],
                              [TruncatedSeries.zero(3), TruncatedSeries.constant(1, 5)]])
    assert m.trunc == 2


def test_from_rows_rejects_non_square() -> None:
    with pytest.raises(ShapeError):
        PolyMatrix.from_rows([[TruncatedSeries.zero(1), TruncatedSeries.zero(1)]])


def test_validation_rejects_mixed_truncation() -> None:
    with pytest.raises(ValidationError, match="truncation"):
        PolyMatrix.model_validate(
            {
                "n": 2,
                "entries": [
                    [{"coeffs": [1], "trunc": 0}, {"coeffs": [1, 0], "trunc": 1}],
                    [{"coeffs": [1], "trunc": 0}, {"coeffs": [1], "trunc": 0}],
                ],
            }
        )


def test_coefficient_and_degree() -> None:
    m = PolyMatrix.from_coefficients([[[1, 2], [0]], [[0], [3, 0, 4]]], 3)
    assert m.coefficient(1) == [[2, 0], [0, 0]]
    assert m.degree() == 2
    assert m.order() == 0


def test_matmul_identity() -> None:
    m = PolyMatrix.from_coefficients([[[1, 2], [0, 1]], [[3], [4]]], 2)
    assert PolyMatrix.identity(2, 2) @ m == m


def test_inverse_order_by_order() -> None:
    """(I + x N)^-1 = I - x N for nilpotent N."""
    m = PolyMatrix.from_coefficients([[[1], [0, 1]], [[0], [1]]], 3)
    inverse = m.inverse()
    assert inverse.coefficient(1) == [[0, -1], [0, 0]]
    assert (m @ inverse) == PolyMatrix.identity(2, 3)


def test_inverse_requires_invertible_constant() -> None:
    with pytest.raises(NotRegular):
        PolyMatrix.from_coefficients([[[0, 1]]], 2).inverse()


def test_exact_divide_and_shift() -> None:
    m = PolyMatrix.from_coefficients([[[0, 0, Fraction(1, 2)]]], 3)
    assert m.exact_divide(2).coefficient(0) == [[Fraction(1, 2)]]
    assert m.shift(1).coefficient(3) == [[Fraction(1, 2)]]


def test_is_constant() -> None:
    assert PolyMatrix.constant([[1, 2], [3, 4]], 3).is_constant()
    assert not PolyMatrix.from_coefficients([[[1, 1]]], 2).is_constant()
