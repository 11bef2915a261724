"""
Omega evaluation service.
"""

import numpy as np

from ..models.straightener_eval import StraightenerEval


def omega_eval(se: StraightenerEval, x: float) -> np.ndarray:
    """
    Omega_R(x): rotation by alpha_j(x) on each pair, identity on the axis.

    Raises:
        DomainError: x <= 0
    """
    return se.omega(x)
