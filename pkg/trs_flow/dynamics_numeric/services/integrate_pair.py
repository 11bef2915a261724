"""
Paired integration service.
Integrates a reference solution together with its offset to a neighbour, the
offset carried as its own state so flat differences keep relative precision.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from ...settings import get_settings
from ...shared.errors import Escape, TrsFlowError
from ..models.field_evaluator import FieldEvaluator
from ..models.numeric_trajectory import NumericTrajectory
from .integrate import STIFF_RATIO, _check_domain, solve_log, stiffness_ratio

logger = logging.getLogger(__name__)

# Offsets below this relative size use a directional derivative instead of a difference.
LINEARIZE_BELOW = 1e-6


def offset_slope(f: FieldEvaluator, x: float, y: np.ndarray, d: np.ndarray) -> np.ndarray:
    """slope(x, y + d) - slope(x, y) without cancellation for small d."""
    size = float(np.linalg.norm(d))
    if size == 0.0:
        return np.zeros_like(d)
    scale = 1.0 + float(np.linalg.norm(y))
    if f.linear is not None:
        head = f.linear(x) @ d
        rest = f.remainder
    else:
        head = np.zeros_like(d)
        rest = f.slope
    if size > LINEARIZE_BELOW * scale:
        return head + rest(x, y + d) - rest(x, y)
    h = LINEARIZE_BELOW * scale
    u = d / size
    return head + (rest(x, y + h * u) - rest(x, y - h * u)) * (size / (2 * h))


def integrate_pair(
    f: FieldEvaluator,
    x0: float,
    y_ref0: Sequence[float],
    delta0: Sequence[float],
    x1: float,
    tol: Optional[float] = None,
    samples: int = 256,
) -> NumericTrajectory:
    """
    Integrate y_ref and the offset delta = y - y_ref together.

    Args:
        f: Field evaluator
        x0: Start abscissa
        y_ref0: Reference start value
        delta0: Start offset of the neighbour
        x1: Target abscissa
        tol: Relative tolerance (the offset has no absolute floor)
        samples: Number of output samples

    Returns:
        Trajectory of the reference with offsets filled in

    Raises:
        DomainError: An endpoint is outside (0, x_max]
        Escape: The reference or the neighbour reached the domain bound
    """
    tolerance = tol if tol is not None else get_settings().tol
    n = f.n
    y = np.asarray(y_ref0, dtype=float)
    d = np.asarray(delta0, dtype=float)
    if y.shape != (n,) or d.shape != (n,):
        raise ValueError(f"Reference and offset must both have shape ({n},)")
    _check_domain(f, x0, x1)
    if x0 == x1:
        raise ValueError("Integration needs x1 != x0")
    if max(np.linalg.norm(y), np.linalg.norm(y + d)) >= f.bound:
        raise Escape(x0, f"initial value already outside the bound {f.bound:g}")

    def rhs(x: float, state: np.ndarray) -> np.ndarray:
        ref, off = state[:n], state[n:]
        return np.concatenate((f.slope(x, ref), offset_slope(f, x, ref, off)))

    def jac(x: float, state: np.ndarray) -> np.ndarray:
        ref, off = state[:n], state[n:]
        j = f.jacobian(x, ref)
        out = np.zeros((2 * n, 2 * n))
        out[:n, :n] = j
        out[n:, n:] = f.jacobian(x, ref + off) if np.linalg.norm(off) > LINEARIZE_BELOW else j
        return out

    def outside(state: np.ndarray) -> float:
        ref, off = state[:n], state[n:]
        return max(float(np.linalg.norm(ref)), float(np.linalg.norm(ref + off))) - f.bound

    atol = np.concatenate((np.full(n, tolerance), np.full(n, 1e-300)))
    try:
        stiff = stiffness_ratio(f, x0, x1, y, samples) > STIFF_RATIO
        raw = solve_log(rhs, jac, x0, np.concatenate((y, d)), x1, tolerance, atol, samples, outside, (), stiff)
        states = np.asarray(raw.ys)
        logger.debug(f"Paired integration of {f.label} used {raw.method}, {raw.nfev} evaluations")
        return raw.model_copy(
            update={"ys": states[:, :n].tolist(), "offsets": states[:, n:].tolist(), "atol": tolerance}
        )
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Paired integration of {f.label} failed: {str(e)}")
        raise
