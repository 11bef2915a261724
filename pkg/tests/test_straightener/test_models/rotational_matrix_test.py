"""
Tests for the RotationalMatrix and StraightenerEval models.
"""

import math
from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from trs_flow.shared.errors import DomainError
from trs_flow.straightener.models.rotational_matrix import RotationalMatrix, RotationPair
from trs_flow.straightener.models.straightener_eval import StraightenerEval


def test_pair_parses_rationals() -> None:
    pair = RotationPair(start=0, b=["1/2", 3])
    assert pair.b == (Fraction(1, 2), Fraction(3))
    assert pair.model_dump()["b"] == ["1/2", "3"]


def test_zero_rotation_rejected() -> None:
    with pytest.raises(ValidationError, match="nonzero"):
        RotationPair(start=0, b=(0, 0))


def test_pairs_must_fit_and_not_overlap() -> None:
    with pytest.raises(ValidationError, match="does not fit"):
        RotationalMatrix(n=2, degree=0, pairs=(RotationPair(start=1, b=(1,)),))
    with pytest.raises(ValidationError, match="overlaps"):
        RotationalMatrix(n=3, degree=0, pairs=(RotationPair(start=0, b=(1,)), RotationPair(start=1, b=(1,))))
    with pytest.raises(ValidationError, match="degree"):
        RotationalMatrix(n=2, degree=0, pairs=(RotationPair(start=0, b=(1, 1)),))


def test_matrix_is_theta_of_imaginary_part() -> None:
    rotation = RotationalMatrix(n=3, degree=1, pairs=(RotationPair(start=1, b=(2, 1)),))
    m = rotation.matrix(1)
    assert m.coefficient(0) == [[0, 0, 0], [0, 0, -2], [0, 2, 0]]
    assert m.coefficient(1) == [[0, 0, 0], [0, 0, -1], [0, 1, 0]]
    assert rotation.axis_dim == 1
    assert rotation.negate().matrix(1) == -m


def test_degree_must_fit_exponent() -> None:
    rotation = RotationalMatrix(n=2, degree=1, pairs=(RotationPair(start=0, b=(1, 1)),))
    with pytest.raises(ValidationError):
        StraightenerEval(R=rotation, q_param=0)


def test_omega_quarter_turn(unit_rotation: StraightenerEval) -> None:
    """At x = 2 / pi the angle 1/x is a quarter turn."""
    assert unit_rotation.omega(2 / math.pi) == pytest.approx(np.array([[0.0, -1.0], [1.0, 0.0]]), abs=1e-12)


def test_omega_accurate_near_zero(unit_rotation: StraightenerEval) -> None:
    """The angle 1/x is reduced mod 2 pi in extended precision."""
    x = 1 / (2 * math.pi * 1e6 + 0.5)
    assert unit_rotation.angles(x)[0] == pytest.approx(0.5, abs=1e-6)


def test_omega_needs_positive_x(unit_rotation: StraightenerEval) -> None:
    with pytest.raises(DomainError):
        unit_rotation.omega(0.0)
    with pytest.raises(DomainError):
        unit_rotation.omega(-0.5)


def test_axis_untouched(rotation_with_axis: StraightenerEval) -> None:
    omega = rotation_with_axis.omega(0.3)
    assert omega[2] == pytest.approx([0.0, 0.0, 1.0])
    assert omega[:, 2] == pytest.approx([0.0, 0.0, 1.0])
