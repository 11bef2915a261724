"""
Tests for center_manifold_jet.
"""

import pytest

from trs_flow.dynamics_numeric.services.center_manifold_jet import center_manifold_jet, split_center
from trs_flow.series_core.models.block_structure import BlockStructure
from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.vf_couples.models.trs_vf_form import TRSVFForm


@pytest.fixture
def saddle_node() -> TRSVFForm:
    """x^2 d/dx + x z d/dz + (-w + x^3) d/dw."""
    return TRSVFForm(
        e=0,
        q=1,
        N=0,
        M=0,
        bs=BlockStructure.model_validate({"blocks": [["real", 1], ["real", 1]]}),
        D=PolyMatrix.constant([[0, 0], [0, -1]], 0),
        C=PolyMatrix.constant([[1, 0], [0, 0]], 0),
        V=(MultiSeries.zero(2, 8), MultiSeries.monomial([1, 0, 0], 1, 2, 8)),
        unit=MultiSeries.constant(1, 2, 8),
    )


def test_split(saddle_node: TRSVFForm) -> None:
    assert split_center(saddle_node) == ([0], [1])


def test_graph_solves_invariance(saddle_node: TRSVFForm) -> None:
    """-h + x^3 = x^2 h' gives h = x^3 - 3x^4 + 12x^5 - 60x^6."""
    jet = center_manifold_jet(saddle_node, 6)
    assert jet.z_index == (0,)
    assert jet.w_index == (1,)
    h = jet.h[0]
    assert [h.coefficient([k, 0]) for k in range(7)] == [0, 0, 0, 1, -3, 12, -60]
    assert h.coefficient([1, 1]) == 0
    assert jet.flat_power == 2
    assert jet.divisible


def test_degree_must_be_positive(saddle_node: TRSVFForm) -> None:
    with pytest.raises(ValueError):
        center_manifold_jet(saddle_node, 0)
