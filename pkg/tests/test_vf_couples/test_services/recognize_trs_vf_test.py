"""
Tests for recognize_trs_vf and split_unit.
"""

from fractions import Fraction

import pytest

from trs_flow.series_core.models.block_structure import BlockStructure
from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.vf_couples.models.formal_curve import FormalCurve
from trs_flow.vf_couples.models.invariant_couple import InvariantCouple
from trs_flow.vf_couples.models.trs_vf_form import TRSVFForm
from trs_flow.vf_couples.services.recognize_trs_vf import recognize_trs_vf, split_unit


def _form(e: int = 0, unit: int = 1) -> TRSVFForm:
    """x^e u (x^2 d/dx + ((1 - x) y + x^2 y^2) d/dy)."""
    return TRSVFForm(
        e=e,
        q=1,
        N=0,
        M=0,
        bs=BlockStructure.model_validate({"blocks": [["real", 1]]}),
        D=PolyMatrix.constant([[1]], 0),
        C=PolyMatrix.constant([[-1]], 0),
        V=(MultiSeries.monomial([0, 2], 1, 1, 6),),
        unit=MultiSeries.constant(unit, 1, 6),
    )


@pytest.fixture
def trs_couple() -> InvariantCouple:
    return InvariantCouple(vf=_form().to_field(6), curve=FormalCurve.zero(1, 5))


def test_form_recovered(trs_couple: InvariantCouple) -> None:
    form = recognize_trs_vf(trs_couple)
    assert form is not None
    assert (form.e, form.q) == (0, 1)
    assert form.D.at_zero() == [[1]]
    assert form.C.at_zero() == [[-1]]
    assert form.V[0].coefficient([0, 2]) == 1
    assert not form.unit_present


def test_power_of_x_and_unit_recovered() -> None:
    couple = InvariantCouple(vf=_form(e=1, unit=2).to_field(7), curve=FormalCurve.zero(1, 6))
    split = split_unit(couple)
    assert split is not None
    assert (split.e, split.q) == (1, 1)
    form = recognize_trs_vf(couple)
    assert form is not None
    assert form.e == 1
    assert form.unit.coefficient([0, 0]) == Fraction(2)


def test_stricter_types_rejected(trs_couple: InvariantCouple) -> None:
    """y^2 carries no extra x, so neither N = 1 nor M = 1 holds."""
    assert recognize_trs_vf(trs_couple, N=1) is None
    assert recognize_trs_vf(trs_couple, M=1) is None


def test_euler_field_is_not_trs(euler_couple: InvariantCouple) -> None:
    assert recognize_trs_vf(euler_couple) is None
