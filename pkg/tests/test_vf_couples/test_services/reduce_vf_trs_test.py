"""
Tests for reduce_vf_trs and refine_trs.
"""

from typing import Callable

import pytest

from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.shared.errors import Inadmissible, InsufficientPrecision
from trs_flow.vf_couples.models.formal_curve import FormalCurve
from trs_flow.vf_couples.models.invariant_couple import InvariantCouple
from trs_flow.vf_couples.models.vector_field_jet import VectorFieldJet
from trs_flow.vf_couples.services.check_invariance import check_invariance
from trs_flow.vf_couples.services.reduce_vf_trs import reduce_vf_trs
from trs_flow.vf_couples.services.refine_trs import refine_trs


def test_euler_reaches_trs_form(euler_couple: InvariantCouple) -> None:
    """The reduced Euler field is x^2 d/dx + ((1 - 2x) y - 6 x^2) d/dy."""
    reduction = reduce_vf_trs(euler_couple)
    form = reduction.form
    assert form.q == 1
    assert form.e == 0
    assert form.D.at_zero() == [[1]]
    assert form.C.at_zero() == [[-2]]
    assert form.V[0].coefficient([0, 0]) == -6
    assert form.V[0].coefficient([1, 0]) == 0
    assert len(reduction.chain) == 3
    assert reduction.linear is not None


def test_reduction_chain_replays(euler_couple: InvariantCouple) -> None:
    reduction = reduce_vf_trs(euler_couple)
    assert reduction.chain.replay(euler_couple) == reduction.couple
    assert check_invariance(reduction.couple).holds


def test_trs_input_returned_unchanged(euler_couple: InvariantCouple) -> None:
    reduced = reduce_vf_trs(euler_couple).couple
    again = reduce_vf_trs(reduced)
    assert len(again.chain) == 0
    assert again.couple == reduced


def test_refine_pushes_vestigial_part(euler_couple_at: Callable[[int], InvariantCouple]) -> None:
    """Translate by a 7-jet and blow up three times: C moves from -2 to -5."""
    reduced = reduce_vf_trs(euler_couple_at(20)).couple
    refined = refine_trs(reduced, N=2, M=0)
    assert refined.form.q == 1
    assert refined.form.N == 2
    assert refined.form.C.at_zero() == [[-5]]
    assert [step.kind for step in refined.chain.steps] == ["poly_translation"] + ["diag_monomial"] * 3
    assert check_invariance(refined.couple).holds


def test_refine_requires_trs_form(euler_couple: InvariantCouple) -> None:
    with pytest.raises(Inadmissible):
        refine_trs(euler_couple, 1, 0)


def test_refine_rejects_negative_targets(euler_couple: InvariantCouple) -> None:
    with pytest.raises(ValueError):
        refine_trs(euler_couple, -1, 0)


def test_trs_linear_part_needs_no_preparation() -> None:
    """x (d/dx + y d/dy) becomes x d/dx + (x - 1) y d/dy after a single blow-up."""
    vf = VectorFieldJet.make(MultiSeries.monomial([1, 0], 1, 1, 8), [MultiSeries.monomial([1, 1], 1, 1, 8)])
    reduction = reduce_vf_trs(InvariantCouple(vf=vf, curve=FormalCurve.zero(1, 7)))
    assert reduction.form.q == 0
    assert reduction.form.C.at_zero() == [[-1]]
    assert [step.kind for step in reduction.chain.steps] == ["diag_monomial"]


def test_short_jet_reports_insufficient_precision() -> None:
    """x^3 d/dx + x y2 d/dy1 + y1 d/dy2 ramifies and needs more than a 14-jet."""
    x3 = MultiSeries.monomial([3, 0, 0], 1, 2, 14)
    xi_y1 = MultiSeries.monomial([1, 0, 1], 1, 2, 14)
    xi_y2 = MultiSeries.variable(1, 2, 14)
    couple = InvariantCouple(vf=VectorFieldJet.make(x3, [xi_y1, xi_y2]), curve=FormalCurve.zero(2, 13))
    with pytest.raises(InsufficientPrecision):
        reduce_vf_trs(couple)
