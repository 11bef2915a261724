"""
Verify omega properties service.
Numeric checks of orthogonality, isometry, the group law, the axis, the
differential equation, decay of x^M Omega and commutation with C.
"""

import logging
from typing import Optional, Sequence

import mpmath
import numpy as np

from ...series_core.models.poly_matrix import PolyMatrix
from ...settings import get_settings
from ..models.omega_report import OmegaReport, OmegaSign
from ..models.straightener_eval import StraightenerEval

logger = logging.getLogger(__name__)


def _derivative(se: StraightenerEval, x: float) -> np.ndarray:
    """Central difference of Omega in extended precision."""
    out = np.zeros((se.n, se.n))
    if not se.R.pairs:
        return out
    step = 1e-4 / max(se.angular_speed(x), 1.0 / x)
    with mpmath.workdps(se.precision(x) + 20):
        point, h = mpmath.mpf(x), mpmath.mpf(step)
        plus, minus = se.angles_mp(point + h), se.angles_mp(point - h)
        for pair, a, b in zip(se.R.pairs, plus, minus):
            dc = float((mpmath.cos(a) - mpmath.cos(b)) / (2 * h))
            ds = float((mpmath.sin(a) - mpmath.sin(b)) / (2 * h))
            i = pair.start
            out[i: i + 2, i: i + 2] = [[dc, -ds], [ds, dc]]
    return out


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    scale = float(np.linalg.norm(b))
    return float(np.linalg.norm(a - b)) / scale if scale > 0 else float(np.linalg.norm(a))


def verify_omega_properties(
    se: StraightenerEval,
    samples: Sequence[float],
    C: Optional[PolyMatrix] = None,
    M: int = 1,
    tol: float = 1e-6,
    seed: Optional[int] = None,
) -> OmegaReport:
    """
    Check the straightener numerically at every sample x > 0.

    The differential equation is tested in both signs,
    x^(q+2) Omega' = -R Omega (integral definition) and the opposite one;
    the report names the sign the finite differences support.

    Args:
        se: Straightener evaluator
        samples: Points x > 0
        C: Residual part to test commutation with, if any
        M: Power of x in the decay check
        tol: Relative tolerance of the ODE residual
        seed: Seed for the random isometry test vectors

    Returns:
        Report with one error measure per property

    Raises:
        DomainError: A sample is not positive
    """
    rng = np.random.default_rng(seed if seed is not None else get_settings().seed)
    n = se.n
    inverse = se.inverse()
    paired = {i for p in se.R.pairs for i in (p.start, p.start + 1)}
    axis = [i for i in range(n) if i not in paired]
    c = None if C is None else np.array([[float(v) for v in row] for row in C.at_zero()])

    orthogonality = isometry = group = axis_error = 0.0
    residual = opposite = 0.0
    decay_ok = True
    commutation: Optional[float] = None if c is None else 0.0
    for x in samples:
        omega = se.omega(x)
        identity = np.eye(n)
        orthogonality = max(orthogonality, float(np.linalg.norm(omega.T @ omega - identity, 2)))
        group = max(group, float(np.linalg.norm(omega @ inverse.omega(x) - identity, 2)))
        for v in rng.standard_normal((4, n)):
            isometry = max(isometry, abs(float(np.linalg.norm(omega @ v)) / float(np.linalg.norm(v)) - 1.0))
        if axis:
            axis_error = max(axis_error, float(np.max(np.abs(omega[axis, :] - identity[axis, :]))))

        slope = se.rotation_at(x) @ omega / x ** (se.q_param + 2)
        derivative = _derivative(se, x)
        residual = max(residual, _relative(derivative, -slope))
        opposite = max(opposite, _relative(derivative, slope))

        if float(np.linalg.norm(x**M * omega, 2)) > x**M * (1 + 1e-12):
            decay_ok = False
        if c is not None and commutation is not None:
            commutation = max(commutation, float(np.linalg.norm(c @ omega - omega @ c, 2)))

    sign = OmegaSign.INTEGRAL if residual <= opposite else OmegaSign.LEMMA
    report = OmegaReport(
        samples=list(samples),
        tol=tol,
        orthogonality_error=orthogonality,
        isometry_error=isometry,
        group_law_error=group,
        axis_error=axis_error,
        ode_residual=residual,
        ode_residual_opposite=opposite,
        supported_sign=sign,
        decay_ok=decay_ok,
        M=M,
        commutation_error=commutation,
    )
    logger.info(f"Straightener check over {len(samples)} samples: passed = {report.passed}, sign = {sign.value}")
    return report
