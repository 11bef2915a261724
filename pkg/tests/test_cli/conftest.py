"""
Fixtures for command line tests.
"""

import json
from pathlib import Path
from typing import Any, Callable

import pytest
from pydantic import BaseModel

from trs_flow.series_core.models.block_structure import BlockStructure
from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.vf_couples.models.trs_vf_form import TRSVFForm


@pytest.fixture
def write_input(tmp_path: Path) -> Callable[[str, Any], str]:
    """Write a model or a plain object as JSON under tmp_path and return the path."""

    def write(name: str, content: Any) -> str:
        path = tmp_path / name
        if isinstance(content, BaseModel):
            path.write_text(content.model_dump_json())
        else:
            path.write_text(json.dumps(content))
        return str(path)

    return write


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    return tmp_path / "out"


@pytest.fixture
def scalar_form() -> TRSVFForm:
    """x^2 d/dx + ((1 - x) y + x^2 y^2) d/dy."""
    return TRSVFForm(
        e=0,
        q=1,
        N=0,
        M=0,
        bs=BlockStructure.model_validate({"blocks": [["real", 1]]}),
        D=PolyMatrix.constant([[1]], 0),
        C=PolyMatrix.constant([[-1]], 0),
        V=(MultiSeries.monomial([0, 2], 1, 1, 6),),
        unit=MultiSeries.constant(1, 1, 6),
    )
