"""
Iterated tangents services.
Tangent directions at the successive points a curve germ passes through
under repeated blow-up in the charts y = x y'.
"""

import logging

import numpy as np

from ...shared.errors import InsufficientPrecision, TangentUndefined
from ...vf_couples.models.formal_curve import FormalCurve
from ..models.iterated_tangents import IteratedTangents
from ..models.numeric_trajectory import NumericTrajectory

logger = logging.getLogger(__name__)


def _unit(b: np.ndarray) -> list[float]:
    v = np.concatenate(([1.0], b))
    return (v / np.linalg.norm(v)).tolist()


def _limit(xs: np.ndarray, values: np.ndarray) -> tuple[np.ndarray, float]:
    """Value at x = 0 by linear and quadratic extrapolation; returns the quadratic one and the disagreement."""
    linear = np.polyfit(xs, values, 1)[-1]
    quadratic = np.polyfit(xs, values, 2)[-1]
    return np.atleast_1d(quadratic), float(np.max(np.abs(linear - quadratic)))


def iterated_tangents(
    trajectory: NumericTrajectory,
    depth: int,
    tangent_tol: float = 1e-3,
    tail: int = 24,
) -> IteratedTangents:
    """
    Estimate the iterated tangents of (x, gamma(x)) at the origin.

    Level k has base point b_k = lim g_k and tangent (1, b_(k+1)) normalized,
    where g_0 = gamma and g_(k+1) = (g_k - b_k) / x. Limits are extrapolated
    from the tail samples nearest x = 0.

    Args:
        trajectory: Samples of a curve tending to the origin
        depth: Number of levels
        tangent_tol: Allowed disagreement between extrapolations, relative to 1 + |b|
        tail: Number of smallest-x samples used

    Raises:
        TangentUndefined: An extrapolated limit did not settle
    """
    if depth < 1:
        raise ValueError("Depth must be at least 1")
    count = min(max(tail, 4), len(trajectory.xs))
    xs = trajectory.x[:count]
    g = trajectory.y[:count]
    base = np.zeros(trajectory.n)
    tangents: list[list[float]] = []
    bases: list[list[float]] = []
    diagnostics: list[float] = []
    for level in range(depth):
        g = (g - base) / xs[:, None]
        nxt, spread = _limit(xs, g)
        if not np.all(np.isfinite(nxt)) or spread > tangent_tol * (1.0 + float(np.max(np.abs(nxt)))):
            raise TangentUndefined(level, f"extrapolations disagree by {spread:.3g} at level {level}")
        bases.append(base.tolist())
        tangents.append(_unit(nxt))
        diagnostics.append(spread)
        base = nxt
    logger.info(f"Iterated tangents through level {depth - 1}, worst disagreement {max(diagnostics):.3g}")
    return IteratedTangents(tangents=tangents, base_points=bases, diagnostics=diagnostics)


def formal_iterated_tangents(curve: FormalCurve, depth: int) -> IteratedTangents:
    """Exact counterpart: b_k is the coefficient of x^k of Gamma."""
    if depth < 1:
        raise ValueError("Depth must be at least 1")
    if depth > curve.trunc:
        raise InsufficientPrecision(f"Curve known through x^{curve.trunc}, depth {depth} needs x^{depth}")
    coefficient = [np.array([float(g.coefficient(k)) for g in curve.gamma_y]) for k in range(depth + 1)]
    return IteratedTangents(
        tangents=[_unit(coefficient[k + 1]) for k in range(depth)],
        base_points=[(coefficient[k] if k > 0 else np.zeros(curve.n)).tolist() for k in range(depth)],
        diagnostics=[0.0] * depth,
    )
