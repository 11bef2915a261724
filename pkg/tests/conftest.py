"""
Root conftest.py: workspace on sys.path and fixtures shared across modules.
"""

import random
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Callable

import pytest

# Add the workspace root to the Python path so we can import trs_flow
workspace_root = Path(__file__).resolve().parent.parent
if str(workspace_root) not in sys.path:
    sys.path.insert(0, str(workspace_root))

from trs_flow.series_core.models.multi_series import MultiSeries  # noqa: E402
from trs_flow.series_core.models.truncated_series import TruncatedSeries  # noqa: E402
from trs_flow.vf_couples.models.formal_curve import FormalCurve  # noqa: E402
from trs_flow.vf_couples.models.invariant_couple import InvariantCouple  # noqa: E402
from trs_flow.vf_couples.models.vector_field_jet import VectorFieldJet  # noqa: E402


def euler_coefficients(trunc: int) -> list[Fraction]:
    """sum_(n >= 1) (n - 1)! x^n, the formal solution of x^2 y' = y - x."""
    return [Fraction(0)] + [Fraction(factorial(n - 1)) for n in range(1, trunc + 1)]


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator for randomized checks."""
    return random.Random(20240601)


@pytest.fixture
def euler_field() -> VectorFieldJet:
    """x^2 d/dx + (y - x) d/dy known through total degree 10."""
    x2 = MultiSeries.monomial([2, 0], 1, 1, 10)
    xi_y = MultiSeries.variable(1, 1, 10) - MultiSeries.variable(0, 1, 10)
    return VectorFieldJet.make(x2, [xi_y])


@pytest.fixture
def euler_curve() -> FormalCurve:
    return FormalCurve.make([TruncatedSeries.make(euler_coefficients(9), 9)])


@pytest.fixture
def euler_couple(euler_field: VectorFieldJet, euler_curve: FormalCurve) -> InvariantCouple:
    return InvariantCouple(vf=euler_field, curve=euler_curve)


@pytest.fixture
def euler_couple_at() -> Callable[[int], InvariantCouple]:
    """Factory for the Euler couple with the field known through a given degree."""

    def build(trunc: int) -> InvariantCouple:
        x2 = MultiSeries.monomial([2, 0], 1, 1, trunc)
        xi_y = MultiSeries.variable(1, 1, trunc) - MultiSeries.variable(0, 1, trunc)
        curve = FormalCurve.make([TruncatedSeries.make(euler_coefficients(trunc - 1), trunc - 1)])
        return InvariantCouple(vf=VectorFieldJet.make(x2, [xi_y]), curve=curve)

    return build
