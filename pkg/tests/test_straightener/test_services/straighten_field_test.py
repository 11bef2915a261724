"""
Tests for extract_rotational and straighten_field.
"""

import numpy as np
import pytest

from trs_flow.series_core.models.block_structure import BlockStructure
from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.shared.errors import HypothesisViolated
from trs_flow.straightener.services.extract_rotational import extract_rotational
from trs_flow.straightener.services.straighten_field import straighten_field
from trs_flow.vf_couples.models.trs_vf_form import TRSVFForm

COMPLEX = BlockStructure.model_validate({"blocks": [["complex", 1]]})


def test_pure_rotation_is_dominant() -> None:
    rotation = extract_rotational(PolyMatrix.constant([[0, -1], [1, 0]], 0), COMPLEX, 1)
    assert rotation is not None
    assert len(rotation.pairs) == 1
    assert rotation.pairs[0].start == 0
    assert rotation.pairs[0].b == (1,)


def test_real_part_first_means_no_rotation() -> None:
    """1 + i: the real part is not of higher order than the imaginary part."""
    assert extract_rotational(PolyMatrix.constant([[1, -1], [1, 1]], 0), COMPLEX, 1) is None


def test_rotation_removed(rotating_form: TRSVFForm) -> None:
    """Removing Theta(i) leaves -x z, divided by x once: dz/dx = -z / x."""
    rotation = extract_rotational(rotating_form.D, rotating_form.bs, rotating_form.q)
    field = straighten_field(rotating_form, rotation)
    assert field.s == 1
    assert field.reduced_type == (0, 0, 0)
    assert field.evaluate(0.5, np.array([1.0, 2.0])) == pytest.approx([0.5, -1.0, -2.0])


def test_chart_maps_are_inverse(rotating_form: TRSVFForm) -> None:
    field = straighten_field(rotating_form, extract_rotational(rotating_form.D, rotating_form.bs, 1))
    y = np.array([0.3, -0.7])
    assert field.to_original(0.2, field.to_straightened(0.2, y)) == pytest.approx(y)


def test_positive_residual_rejected(rotating_form: TRSVFForm) -> None:
    form = rotating_form.model_copy(update={"C": PolyMatrix.constant([[1, 0], [0, 1]], 0)})
    with pytest.raises(HypothesisViolated, match="Residual spectrum"):
        straighten_field(form, None)


def test_weight_bound_enforced_on_nonzero_vestigial(rotating_form: TRSVFForm) -> None:
    vestigial = (MultiSeries.monomial([0, 2, 0], 1, 2, 4), MultiSeries.zero(2, 4))
    form = rotating_form.model_copy(update={"V": vestigial})
    with pytest.raises(HypothesisViolated, match="floor"):
        straighten_field(form, None)
    relaxed = straighten_field(form, extract_rotational(form.D, form.bs, 1), strict=False)
    assert relaxed.N == 0


def test_flatness_below_weight_rejected(rotating_form: TRSVFForm) -> None:
    form = rotating_form.model_copy(update={"M": 1})
    with pytest.raises(HypothesisViolated, match="N < M"):
        straighten_field(form, None)


def test_form_requires_commuting_residual() -> None:
    with pytest.raises(ValueError):
        TRSVFForm(
            e=0,
            q=1,
            N=0,
            M=0,
            bs=COMPLEX,
            D=PolyMatrix.constant([[0, -1], [1, 0]], 0),
            C=PolyMatrix.constant([[-1, 0], [0, -2]], 0),
            V=(MultiSeries.zero(2, 4), MultiSeries.zero(2, 4)),
            unit=MultiSeries.constant(1, 2, 4),
        )
