"""
Rotation model field service.
"""

from typing import Callable

import numpy as np

from ..models.straightener_eval import StraightenerEval


def rotation_model_field(se: StraightenerEval) -> Callable[[float, np.ndarray], np.ndarray]:
    """
    x^(q+2) d/dx + (R(x) y) . d/dy.

    Its trajectories are y(x) = Omega_-R(x) y_0, so they are constant in the
    chart of the straightener built on -R.
    """
    power = se.q_param + 2

    def evaluate(x: float, y: np.ndarray) -> np.ndarray:
        return np.concatenate(([x**power], se.rotation_at(x) @ np.asarray(y, dtype=float)))

    return evaluate
