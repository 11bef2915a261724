"""
Fixtures for straightener tests.
"""

import pytest

from trs_flow.series_core.models.block_structure import BlockStructure
from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.straightener.models.rotational_matrix import RotationalMatrix, RotationPair
from trs_flow.straightener.models.straightener_eval import StraightenerEval
from trs_flow.vf_couples.models.trs_vf_form import TRSVFForm


@pytest.fixture
def rotating_form() -> TRSVFForm:
    """q = 1, D = Theta(i), C = -I, no vestigial part."""
    return TRSVFForm(
        e=0,
        q=1,
        N=0,
        M=0,
        bs=BlockStructure.model_validate({"blocks": [["complex", 1]]}),
        D=PolyMatrix.constant([[0, -1], [1, 0]], 0),
        C=PolyMatrix.constant([[-1, 0], [0, -1]], 0),
        V=(MultiSeries.zero(2, 4), MultiSeries.zero(2, 4)),
        unit=MultiSeries.constant(1, 2, 4),
    )


@pytest.fixture
def unit_rotation() -> StraightenerEval:
    """Omega rotates by 1/x."""
    return StraightenerEval(R=RotationalMatrix(n=2, degree=0, pairs=(RotationPair(start=0, b=(1,)),)), q_param=0)


@pytest.fixture
def rotation_with_axis() -> StraightenerEval:
    """A rank-one rotation on (y1, y2) with y3 on the axis."""
    pair = RotationPair(start=0, b=("1", "1/2"))
    return StraightenerEval(R=RotationalMatrix(n=3, degree=1, pairs=(pair,)), q_param=1)
