"""
Tests for the series services: arithmetic dispatch, order/jet, exact division,
direct sums and the Theta embedding.
"""

import random
from fractions import Fraction

import pytest

from trs_flow.series_core.models.complex_series import ComplexSeries
from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.series_core.models.truncated_series import TruncatedSeries
from trs_flow.series_core.services.direct_sum import direct_sum
from trs_flow.series_core.services.exact_divide import exact_divide
from trs_flow.series_core.services.ord_jet import ord_jet
from trs_flow.series_core.services.series_arith import SeriesOp, series_arith
from trs_flow.series_core.services.theta_embed import theta_embed
from trs_flow.shared.errors import EmptyPrecision, InsufficientPrecision, NotDivisible, ShapeError


def test_series_arith_by_name() -> None:
    a = TruncatedSeries.make([1, 1], 3)
    b = TruncatedSeries.make([1, -1], 3)
    assert series_arith("mul", a, b).coeffs == (1, 0, -1, 0)
    assert series_arith(SeriesOp.RECIPROCAL, b).coeffs == (1, 1, 1, 1)
    assert series_arith("sub", a, b).coeffs == (0, 2, 0, 0)


def test_series_arith_partial_derivative() -> None:
    x = MultiSeries.variable(0, 1, 4)
    y = MultiSeries.variable(1, 1, 4)
    result = series_arith("derivative", x * y * y, var=1)
    assert result.coefficient([1, 1]) == 2


def test_series_arith_rejects_bad_operands() -> None:
    a = TruncatedSeries.make([1], 2)
    with pytest.raises(ValueError, match="two operands"):
        series_arith("add", a)
    with pytest.raises(ValueError, match="same series type"):
        series_arith("add", a, MultiSeries.constant(1, 1, 2))
    with pytest.raises(EmptyPrecision):
        series_arith("derivative", TruncatedSeries.constant(1, 0))


def test_ord_jet() -> None:
    s = TruncatedSeries.make([0, 0, 3, 4], 3)
    order, jet = ord_jet(s, 2)
    assert order == 2
    assert jet.coeffs == (0, 0, 3, 0)
    assert ord_jet(TruncatedSeries.zero(3), 1)[0] == ">3"
    with pytest.raises(InsufficientPrecision):
        ord_jet(s, 4)


def test_exact_divide_service() -> None:
    s = TruncatedSeries.make([0, 2, 1], 2)
    assert exact_divide(s, 1).coeffs == (2, 1)
    with pytest.raises(NotDivisible):
        exact_divide(s, 2)
    with pytest.raises(ValueError):
        exact_divide(s, -1)


def test_direct_sum_keeps_blocks() -> None:
    m = PolyMatrix.constant([[1]], 2)
    n = PolyMatrix.from_coefficients([[[0, 3]]], 2)
    total = direct_sum(m, n)
    assert total.n == 2
    assert total.at_zero() == [[1, 0], [0, 0]]
    assert total.coefficient(1) == [[0, 0], [0, 3]]
    with pytest.raises(ValueError):
        direct_sum(m, PolyMatrix.constant([[1]], 3))


def test_theta_embed_block_convention() -> None:
    """a + ib becomes [[a, -b], [b, a]]."""
    entry = ComplexSeries.make(TruncatedSeries.make([1], 1), TruncatedSeries.make([2, Fraction(1, 2)], 1))
    m = theta_embed([[entry]])
    assert m.at_zero() == [[1, -2], [2, 1]]
    assert m.coefficient(1) == [[0, Fraction(-1, 2)], [Fraction(1, 2), 0]]


def test_theta_embed_rejects_non_square() -> None:
    entry = ComplexSeries.make(TruncatedSeries.zero(0), TruncatedSeries.zero(0))
    with pytest.raises(ShapeError):
        theta_embed([[entry, entry]])


def _random_complex_matrix(rng: random.Random, m: int, trunc: int) -> list[list[ComplexSeries]]:
    def series() -> TruncatedSeries:
        return TruncatedSeries.make([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(trunc + 1)], trunc)

    return [[ComplexSeries.make(series(), series()) for _ in range(m)] for _ in range(m)]


def _complex_product(a: list[list[ComplexSeries]], b: list[list[ComplexSeries]]) -> list[list[ComplexSeries]]:
    m = len(a)
    product = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for k in range(1, m):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        product.append(row)
    return product


def test_theta_embed_is_a_ring_morphism(rng: random.Random) -> None:
    for _ in range(10):
        m = rng.randint(1, 3)
        a, b = _random_complex_matrix(rng, m, 3), _random_complex_matrix(rng, m, 3)
        assert theta_embed(_complex_product(a, b)) == theta_embed(a) @ theta_embed(b)
        total = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
        assert theta_embed(total) == theta_embed(a) + theta_embed(b)
