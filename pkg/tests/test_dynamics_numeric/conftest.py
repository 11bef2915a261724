"""
Fixtures for numeric dynamics tests.
"""

import numpy as np
import pytest

from trs_flow.dynamics_numeric.models.field_evaluator import FieldEvaluator
from trs_flow.dynamics_numeric.models.numeric_trajectory import NumericTrajectory
from trs_flow.vf_couples.models.vector_field_jet import VectorFieldJet


@pytest.fixture
def euler_evaluator(euler_field: VectorFieldJet) -> FieldEvaluator:
    """dy/dx = (y - x) / x^2 with its linear part."""
    return FieldEvaluator.from_vector_field(euler_field)


@pytest.fixture
def radial_evaluator() -> FieldEvaluator:
    """dy/dx = y / x, solved by y = c x."""
    return FieldEvaluator.from_field(lambda x, y: np.concatenate(([x], y)), n=1, q=0)


@pytest.fixture
def parabola() -> NumericTrajectory:
    """y = x^2 on [1e-3, 1e-1]."""
    xs = np.logspace(-3, -1, 60)
    return NumericTrajectory(xs=xs.tolist(), ys=(xs[:, None] ** 2).tolist(), method="exact", rtol=1e-12, atol=1e-12)
