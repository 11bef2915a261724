"""
Asymptotic shooting service.
Seeds a trajectory on the jet of a formal invariant curve and integrates it
across a window in the contracting direction.
"""

import logging
from typing import Literal, Optional

import numpy as np

from ...shared.errors import Escape, InsufficientPrecision, SeedTooCoarse, TrsFlowError
from ...vf_couples.models.formal_curve import FormalCurve
from ..models.contact_report import ShootResult
from ..models.field_evaluator import FieldEvaluator
from .contact_report import contact_report
from .integrate import integrate

logger = logging.getLogger(__name__)

Direction = Literal["auto", "forward", "backward"]


def contracting_direction(f: FieldEvaluator, x: float, y: np.ndarray) -> str:
    """'backward' when every direction expands with growing x, else 'forward'."""
    eigenvalues = np.linalg.eigvals(f.jacobian(x, y))
    return "backward" if np.all(eigenvalues.real > 0) else "forward"


def shoot_asymptotic(
    f: FieldEvaluator,
    curve: FormalCurve,
    K: int,
    window: tuple[float, float],
    tol: Optional[float] = None,
    N_max: Optional[int] = None,
    direction: Direction = "auto",
    samples: int = 256,
) -> ShootResult:
    """
    Shoot along j_K Gamma and report the contact reached.

    Forward shots seed at the small end of the window; backward shots seed
    at the large end and integrate toward x = 0, where solutions of expanding
    fields converge to one another.

    Args:
        f: Field evaluator
        curve: Formal invariant curve
        K: Jet order used for the seed
        window: (x_s, x_end) with 0 < x_s < x_end
        tol: Integration tolerance
        N_max: Highest contact order to test (default min(K, trunc))
        direction: 'forward', 'backward' or 'auto'
        samples: Number of output samples

    Raises:
        InsufficientPrecision: K exceeds the curve truncation
        SeedTooCoarse: The shot escaped before covering the window
    """
    x_s, x_end = window
    if not 0 < x_s < x_end:
        raise ValueError(f"Window ({x_s:g}, {x_end:g}) must satisfy 0 < x_s < x_end")
    if K > curve.trunc:
        raise InsufficientPrecision(f"Curve known through x^{curve.trunc}, seed asks for K = {K}")
    jet = curve.jet(K)

    def seed(x: float) -> np.ndarray:
        return np.array([g.evaluate(x) for g in jet])

    try:
        chosen = contracting_direction(f, x_s, seed(x_s)) if direction == "auto" else direction
        start, stop = (x_s, x_end) if chosen == "forward" else (x_end, x_s)
        logger.info(f"Shooting {f.label} {chosen} from x = {start:g} with a K = {K} seed")
        try:
            trajectory = integrate(f, start, seed(start), stop, tol=tol, samples=samples)
        except Escape as e:
            raise SeedTooCoarse(f"Seed escaped at x = {e.x_star:.6g} before covering the window") from e
        contact = contact_report(trajectory, curve, N_max if N_max is not None else min(K, curve.trunc))
        return ShootResult(trajectory=trajectory, contact=contact, direction=chosen)
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Shooting failed: {str(e)}")
        raise
