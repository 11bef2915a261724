"""
Flat contact service.
Checks that two trajectories differ by O(x^K) for every K up to K_max.
"""

import logging
import math
from typing import Optional

import numpy as np

from ...shared.errors import InsufficientWindow
from ..models.contact_report import FlatContactReport
from ..models.numeric_trajectory import NumericTrajectory
from .contact_report import log_slope

logger = logging.getLogger(__name__)

MIN_RATIO = 2.0


def flat_contact_check(
    first: NumericTrajectory,
    second: Optional[NumericTrajectory] = None,
    K_max: int = 10,
    noise: float = 1e-13,
) -> FlatContactReport:
    """
    Fit log ||gamma_1 - gamma_2|| against log x.

    With second omitted the offsets of a paired integration are used; they
    carry no noise floor. Otherwise the second trajectory is interpolated
    onto the samples of the first inside the common window.

    Raises:
        InsufficientWindow: The common window is shorter than a factor 2 in x
    """
    if second is None:
        if first.offsets is None:
            raise ValueError("A single trajectory needs offsets from paired integration")
        xs = first.x
        difference = np.linalg.norm(np.asarray(first.offsets), axis=1)
        floor = np.zeros_like(difference)
    else:
        lo = max(first.window[0], second.window[0])
        hi = min(first.window[1], second.window[1])
        if hi / lo < MIN_RATIO:
            raise InsufficientWindow(f"Common window [{lo:g}, {hi:g}] is too short")
        mask = (first.x >= lo) & (first.x <= hi)
        xs = first.x[mask]
        mine = first.y[mask]
        other = np.column_stack([np.interp(xs, second.x, second.y[:, i]) for i in range(second.n)])
        difference = np.linalg.norm(mine - other, axis=1)
        floor = noise * (1.0 + np.linalg.norm(mine, axis=1))

    if xs[-1] / xs[0] < MIN_RATIO:
        raise InsufficientWindow(f"Window [{xs[0]:g}, {xs[-1]:g}] is too short")
    slope = log_slope(xs, difference, floor)
    capped = math.isinf(slope)
    failing: Optional[int] = None
    if slope < K_max:
        failing = max(0, math.floor(slope) + 1)
    report = FlatContactReport(
        window=(float(xs[0]), float(xs[-1])), K_max=K_max, slope=slope, failing_K=failing, capped=capped
    )
    if report.flat:
        logger.info(f"Difference is O(x^{K_max}) on {report.window} (slope {slope:.3g})")
    else:
        logger.info(f"Flat contact fails at K = {failing} (slope {slope:.3g})")
    return report
