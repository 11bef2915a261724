"""
Contact report service.
Fits ||gamma(x) - j_N Gamma(x)|| against x^(N+1) on a log-log scale.
"""

import logging

import numpy as np

from ...shared.errors import InsufficientPrecision, InsufficientWindow
from ...vf_couples.models.formal_curve import FormalCurve
from ..models.contact_report import ContactOrder, ContactReport
from ..models.numeric_trajectory import NumericTrajectory

logger = logging.getLogger(__name__)

MIN_DECADES = 1.0


def log_slope(xs: np.ndarray, residual: np.ndarray, floor: np.ndarray) -> float:
    """Least-squares slope of log residual vs log x over points above the floor; inf if fewer than two."""
    mask = residual > floor
    if np.count_nonzero(mask) < 2:
        return float("inf")
    slope, _ = np.polyfit(np.log(xs[mask]), np.log(residual[mask]), 1)
    return float(slope)


def contact_report(
    trajectory: NumericTrajectory,
    curve: FormalCurve,
    N_max: int,
    slope_margin: float = 0.1,
    ratio_cap: float = 1e12,
    noise: float = 1e-13,
) -> ContactReport:
    """
    Certify gamma - j_N Gamma = O(x^(N+1)) for N = 0..N_max.

    N is certified when the fitted slope is at least N + 1 - slope_margin and
    the ratio residual / x^(N+1) stays below ratio_cap. Residuals under the
    noise floor noise * (1 + ||gamma||) count as zero.

    Raises:
        InsufficientWindow: The samples span less than one decade in x
        InsufficientPrecision: N_max exceeds the curve truncation
    """
    lo, hi = trajectory.window
    if np.log10(hi / lo) < MIN_DECADES:
        raise InsufficientWindow(f"Window [{lo:g}, {hi:g}] spans less than {MIN_DECADES:g} decade")
    if N_max > curve.trunc:
        raise InsufficientPrecision(f"Curve known through x^{curve.trunc}, contact asked through N = {N_max}")
    if curve.n != trajectory.n:
        raise ValueError(f"Curve has {curve.n} components, trajectory {trajectory.n}")

    xs, ys = trajectory.x, trajectory.y
    floor = noise * (1.0 + np.linalg.norm(ys, axis=1))
    orders = []
    for N in range(N_max + 1):
        jet = curve.jet(N)
        approx = np.array([[g.evaluate(x) for g in jet] for x in xs])
        residual = np.linalg.norm(ys - approx, axis=1)
        slope = log_slope(xs, residual, floor)
        above = residual > floor
        sup_ratio = float(np.max(residual[above] / xs[above] ** (N + 1))) if np.any(above) else 0.0
        certified = slope >= N + 1 - slope_margin and sup_ratio <= ratio_cap
        orders.append(ContactOrder(N=N, sup_ratio=sup_ratio, slope=slope, certified=certified))

    report = ContactReport(window=(lo, hi), orders=orders, slope_margin=slope_margin)
    logger.info(f"Contact certified through N = {report.max_certified} on [{lo:g}, {hi:g}]")
    return report
