"""
Tests for lift_gauge_chain and determinacy_shift.
"""

from trs_flow.linear_systems.models.gauge_transform import DiagMonomial, PolyRegular, Ramification
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.series_core.models.truncated_series import TruncatedSeries
from trs_flow.vf_couples.models.coord_transform import DiagMonomialCT, PolyRegularCT, PolyTranslation, RamificationCT
from trs_flow.vf_couples.services.determinacy_shift import determinacy_shift
from trs_flow.vf_couples.services.lift_gauge_chain import lift_gauge_chain


def test_partial_monomial_gauge_is_conjugated_blow_up() -> None:
    lifted = lift_gauge_chain([DiagMonomial(exponents=(1, 0))])
    assert [step.kind for step in lifted] == ["poly_regular", "diag_monomial", "poly_regular"]
    assert lifted[1] == DiagMonomialCT(k=1)


def test_full_monomial_gauge_is_plain_blow_up() -> None:
    assert lift_gauge_chain([DiagMonomial(exponents=(1, 1))]) == [DiagMonomialCT(k=2)]


def test_second_coordinate_moved_to_front() -> None:
    lifted = lift_gauge_chain([DiagMonomial(exponents=(0, 1))])
    assert lifted[0] == PolyRegularCT.permutation([1, 0])
    assert lifted[1] == DiagMonomialCT(k=1)


def test_regular_and_ramification_carry_over() -> None:
    p = PolyMatrix.from_coefficients([[[1, 1], [0]], [[0], [1]]], 1)
    lifted = lift_gauge_chain([PolyRegular(P=p), Ramification(r=3)])
    assert lifted == [PolyRegularCT(P=p), RamificationCT(r=3)]


def test_determinacy_counts_blow_ups() -> None:
    steps = [
        PolyTranslation(beta=(TruncatedSeries.make([0, 1], 1),)),
        DiagMonomialCT(k=1),
        RamificationCT(r=2),
        DiagMonomialCT(k=1),
    ]
    assert determinacy_shift(steps, 3) == 5
    assert determinacy_shift([], 3) == 3
