"""
Tests for apply_gauge and is_admissible.
"""

import pytest

from trs_flow.linear_systems.models.gauge_transform import DiagMonomial, PolyRegular, Ramification
from trs_flow.linear_systems.models.linear_system import LinearSystem
from trs_flow.linear_systems.services.apply_gauge import apply_gauge
from trs_flow.linear_systems.services.diagonal_steps import diagonal_steps
from trs_flow.linear_systems.services.is_admissible import is_admissible
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.shared.errors import Inadmissible, ShapeError


def test_identity_gauge_is_neutral(coupled_system: LinearSystem) -> None:
    result = apply_gauge(coupled_system, PolyRegular(P=PolyMatrix.identity(2, 0)))
    assert result.p == coupled_system.p
    assert result.A == coupled_system.A


def test_ramification_scales_matrix() -> None:
    """x = z^2 turns x^2 y' = A0 y into z^3 y' = 2 A0 y."""
    system = LinearSystem(n=2, p=1, A=PolyMatrix.constant([[1, 0], [0, -1]], 2))
    result = apply_gauge(system, Ramification(r=2))
    assert result.p == 2
    assert result.A.at_zero() == [[2, 0], [0, -2]]
    assert result.A.coefficient(1) == [[0, 0], [0, 0]]


def test_ramification_rejects_regular_system() -> None:
    system = LinearSystem(n=1, p=-1, A=PolyMatrix.constant([[1]], 2))
    with pytest.raises(Inadmissible):
        apply_gauge(system, Ramification(r=2))


def test_diagonal_gauge_block_formula(coupled_system: LinearSystem) -> None:
    """diag(x, 1) gives [[A11 - x, A12 / x], [x A21, A22]] = [[-x, 1], [x, 0]]."""
    result = apply_gauge(coupled_system, DiagMonomial(exponents=(1, 0)))
    assert result.p == 1
    assert result.A.at_zero() == [[0, 1], [0, 0]]
    assert result.A.coefficient(1) == [[-1, 0], [1, 0]]


def test_constant_gauge_conjugates(coupled_system: LinearSystem) -> None:
    swap = PolyRegular(P=PolyMatrix.constant([[0, 1], [1, 0]], 0))
    result = apply_gauge(coupled_system, swap)
    assert result.A.at_zero() == [[0, 1], [0, 0]]
    assert result.A.coefficient(1) == [[0, 0], [1, 0]]


def test_gauge_size_mismatch(coupled_system: LinearSystem) -> None:
    with pytest.raises(ShapeError):
        apply_gauge(coupled_system, PolyRegular(P=PolyMatrix.identity(3, 0)))


def test_diagonal_steps_decomposition() -> None:
    assert diagonal_steps([2, 0, 1]) == [(1, 0, 1), (1, 0, 0)]


def test_admissibility(coupled_system: LinearSystem, nilpotent_system: LinearSystem) -> None:
    assert is_admissible(coupled_system, PolyRegular(P=PolyMatrix.identity(2, 0)))
    assert is_admissible(coupled_system, DiagMonomial(exponents=(1, 0)))
    assert not is_admissible(nilpotent_system, DiagMonomial(exponents=(1, 0)))
    regular = LinearSystem(n=1, p=-1, A=PolyMatrix.constant([[1]], 2))
    assert not is_admissible(regular, Ramification(r=3))
