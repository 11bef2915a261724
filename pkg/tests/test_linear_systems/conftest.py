"""
Fixtures for linear system tests.
"""

import pytest

from trs_flow.linear_systems.models.linear_system import LinearSystem
from trs_flow.series_core.models.poly_matrix import PolyMatrix


@pytest.fixture
def coupled_system() -> LinearSystem:
    """x^2 y' = [[0, x], [1, 0]] y."""
    return LinearSystem(n=2, p=1, A=PolyMatrix.from_coefficients([[[0], [0, 1]], [[1], [0]]], 3))


@pytest.fixture
def nilpotent_system() -> LinearSystem:
    """x y' = [[0, 1], [0, 0]] y."""
    return LinearSystem(n=2, p=0, A=PolyMatrix.constant([[0, 1], [0, 0]], 2))
