"""
Tests for integrate, integrate_pair, flat_contact_check and shoot_asymptotic.
"""

import math
from typing import Callable

import numpy as np
import pytest

from trs_flow.dynamics_numeric.models.field_evaluator import FieldEvaluator
from trs_flow.dynamics_numeric.services.flat_contact_check import flat_contact_check
from trs_flow.dynamics_numeric.services.integrate import integrate
from trs_flow.dynamics_numeric.services.integrate_pair import integrate_pair
from trs_flow.dynamics_numeric.services.shoot_asymptotic import shoot_asymptotic
from trs_flow.shared.errors import DomainError, Escape, SeedTooCoarse
from trs_flow.straightener.models.rotational_matrix import RotationalMatrix, RotationPair
from trs_flow.straightener.models.straightener_eval import StraightenerEval
from trs_flow.straightener.services.rotation_model_field import rotation_model_field
from trs_flow.vf_couples.models.formal_curve import FormalCurve
from trs_flow.vf_couples.models.invariant_couple import InvariantCouple
from trs_flow.vf_couples.services.reduce_vf_trs import reduce_vf_trs
from trs_flow.vf_couples.services.refine_trs import refine_trs


def test_backward_integration_sorted(radial_evaluator: FieldEvaluator) -> None:
    trajectory = integrate(radial_evaluator, 1.0, [1.0], 0.1, tol=1e-10)
    assert trajectory.xs[0] == pytest.approx(0.1)
    assert trajectory.xs[-1] == pytest.approx(1.0)
    assert trajectory.ys[0][0] == pytest.approx(0.1, rel=1e-8)
    assert trajectory.method == "DOP853"
    assert not trajectory.stiff_fallback


def test_domain_checked(radial_evaluator: FieldEvaluator) -> None:
    with pytest.raises(DomainError):
        integrate(radial_evaluator, 0.5, [1.0], 2.0)
    with pytest.raises(DomainError):
        integrate(radial_evaluator, 0.5, [1.0], 0.0)


def test_forward_blow_up_escapes(euler_evaluator: FieldEvaluator) -> None:
    """Away from the curve, solutions grow like exp(-1/x) as x increases."""
    with pytest.raises(Escape) as info:
        integrate(euler_evaluator, 0.01, [1.0], 1.0)
    assert 0.01 < info.value.x_star < 1.0


def test_paired_offsets_are_flat(euler_evaluator: FieldEvaluator) -> None:
    """Offsets between Euler solutions decay like exp(1/x0 - 1/x)."""
    paired = integrate_pair(euler_evaluator, 0.1, [0.1124], [1e-3], 0.02)
    assert paired.offsets is not None
    assert paired.offsets[-1][0] == pytest.approx(1e-3)
    assert paired.offsets[0][0] == pytest.approx(1e-3 * math.exp(10 - 1 / paired.xs[0]), rel=1e-5)
    assert flat_contact_check(paired, K_max=10).flat


def test_linear_difference_is_not_flat(radial_evaluator: FieldEvaluator) -> None:
    first = integrate(radial_evaluator, 1.0, [1.0], 0.1)
    second = integrate(radial_evaluator, 1.0, [1.5], 0.1)
    report = flat_contact_check(first, second, K_max=4)
    assert report.slope == pytest.approx(1.0, abs=1e-4)
    assert not report.flat


def test_single_trajectory_needs_offsets(radial_evaluator: FieldEvaluator) -> None:
    with pytest.raises(ValueError, match="offsets"):
        flat_contact_check(integrate(radial_evaluator, 1.0, [1.0], 0.1))


def test_shot_follows_curve(euler_evaluator: FieldEvaluator, euler_curve: FormalCurve) -> None:
    shot = shoot_asymptotic(euler_evaluator, euler_curve, 3, (0.004, 0.05), N_max=0)
    assert shot.direction == "backward"
    x = shot.trajectory.xs[0]
    assert shot.trajectory.ys[0][0] == pytest.approx(x + x**2 + 2 * x**3, abs=1e-8)
    assert shot.contact.max_certified == 0


def test_forward_shot_escapes(euler_evaluator: FieldEvaluator, euler_curve: FormalCurve) -> None:
    with pytest.raises(SeedTooCoarse):
        shoot_asymptotic(euler_evaluator, euler_curve, 3, (0.004, 0.05), direction="forward")


def test_window_checked(euler_evaluator: FieldEvaluator, euler_curve: FormalCurve) -> None:
    with pytest.raises(ValueError):
        shoot_asymptotic(euler_evaluator, euler_curve, 3, (0.05, 0.005))


def test_refined_euler_shot_certifies_contact(euler_couple_at: Callable[[int], InvariantCouple]) -> None:
    """After refinement with N = 6 the field is x^2 w' = (1 - 9x) w - 17! x^9 and w ~ 17! x^9."""
    reduced = reduce_vf_trs(euler_couple_at(30)).couple
    refined = refine_trs(reduced, N=6, M=0)
    assert refined.form.N == 6
    assert refined.form.C.at_zero() == [[-9]]
    f = FieldEvaluator.from_trs_form(refined.form)
    shot = shoot_asymptotic(f, refined.couple.curve, 12, (0.0019, 0.02), tol=1e-12, N_max=6)
    assert shot.direction == "backward"
    assert shot.contact.max_certified is not None
    assert shot.contact.max_certified >= 6


def test_straightener_unlaces_rotation() -> None:
    """x^2 y' = Theta(i) y winds through 1/x radians; in the straightened chart it stands still."""
    rotation = StraightenerEval(R=RotationalMatrix(n=2, degree=0, pairs=(RotationPair(start=0, b=(1,)),)), q_param=0)
    f = FieldEvaluator.from_field(rotation_model_field(rotation), n=2, q=1)
    trajectory = integrate(f, 0.3, [1.0, 0.0], 0.01, tol=1e-12, samples=512)
    xs, ys = np.array(trajectory.xs), np.array(trajectory.ys)

    winding = np.unwrap(np.arctan2(ys[:, 1], ys[:, 0]))
    assert abs(winding[-1] - winding[0]) > 20 * math.pi

    chart = rotation.inverse()
    zs = np.array([chart.omega(x).T @ y for x, y in zip(xs, ys)])
    assert np.max(np.linalg.norm(zs - zs[-1], axis=1)) < 1e-6
