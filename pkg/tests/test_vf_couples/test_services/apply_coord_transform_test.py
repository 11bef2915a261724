"""
Tests for apply_coord_transform.
"""

from fractions import Fraction

import pytest

from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.series_core.models.truncated_series import TruncatedSeries
from trs_flow.shared.errors import Inadmissible
from trs_flow.vf_couples.models.coord_transform import DiagMonomialCT, PolyRegularCT, PolyTranslation, RamificationCT
from trs_flow.vf_couples.models.formal_curve import FormalCurve
from trs_flow.vf_couples.models.invariant_couple import InvariantCouple
from trs_flow.vf_couples.models.vector_field_jet import VectorFieldJet
from trs_flow.vf_couples.services.apply_coord_transform import apply_coord_transform
from trs_flow.vf_couples.services.check_invariance import check_invariance


@pytest.fixture
def translated(euler_couple: InvariantCouple) -> InvariantCouple:
    """Euler couple after y = x + x^2 + y~."""
    return apply_coord_transform(euler_couple, PolyTranslation(beta=(TruncatedSeries.make([0, 1, 1], 2),)))


def test_translation_removes_curve_jet(translated: InvariantCouple) -> None:
    """y - x becomes y~ - 2 x^3 and the curve starts at 2 x^3."""
    xi_y = translated.vf.xi_y[0]
    assert xi_y.coefficient([0, 1]) == 1
    assert xi_y.coefficient([1, 0]) == 0
    assert xi_y.coefficient([3, 0]) == -2
    assert translated.curve.contact_order() == 3
    assert translated.curve.gamma_y[0].coefficient(3) == 2
    assert check_invariance(translated).holds


def test_blow_up_divides_by_x(translated: InvariantCouple) -> None:
    """y = x y~ turns y~ - 2 x^3 into y~ - x y~ - 2 x^2."""
    blown = apply_coord_transform(translated, DiagMonomialCT(k=1))
    xi_y = blown.vf.xi_y[0]
    assert xi_y.coefficient([0, 1]) == 1
    assert xi_y.coefficient([1, 1]) == -1
    assert xi_y.coefficient([2, 0]) == -2
    assert blown.curve.gamma_y[0].coefficient(2) == 2
    assert check_invariance(blown).holds


def test_blow_up_needs_contact_two(euler_couple: InvariantCouple) -> None:
    with pytest.raises(Inadmissible, match="contact"):
        apply_coord_transform(euler_couple, DiagMonomialCT(k=1))


def test_regular_scaling(euler_couple: InvariantCouple) -> None:
    """y = 2 y~ gives y~ - x/2 and halves the curve."""
    scaled = apply_coord_transform(euler_couple, PolyRegularCT(P=PolyMatrix.constant([[2]], 0)))
    assert scaled.vf.xi_y[0].coefficient([0, 1]) == 1
    assert scaled.vf.xi_y[0].coefficient([1, 0]) == Fraction(-1, 2)
    assert scaled.curve.gamma_y[0].coefficient(1) == Fraction(1, 2)


def test_ramification(euler_couple: InvariantCouple) -> None:
    """x = x~^2 gives x~^3 / 2 d/dx~ + (y - x~^2) d/dy."""
    ramified = apply_coord_transform(euler_couple, RamificationCT(r=2))
    assert ramified.vf.xi_x.coefficient([3, 0]) == Fraction(1, 2)
    assert ramified.vf.xi_y[0].coefficient([2, 0]) == -1
    assert ramified.curve.gamma_y[0].coefficient(2) == 1
    assert ramified.curve.gamma_y[0].coefficient(3) == 0


def test_ramification_needs_invariant_axis() -> None:
    y = MultiSeries.variable(1, 1, 4)
    couple = InvariantCouple(vf=VectorFieldJet.make(y, [y]), curve=FormalCurve.zero(1, 4))
    with pytest.raises(Inadmissible):
        apply_coord_transform(couple, RamificationCT(r=2))
