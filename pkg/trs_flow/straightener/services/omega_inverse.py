"""
Omega inverse service.
"""

import numpy as np

from ..models.straightener_eval import StraightenerEval


def omega_inverse(se: StraightenerEval, x: float) -> np.ndarray:
    """Omega_R(x)^-1 = Omega_-R(x) = Omega_R(x)^T."""
    return se.inverse().omega(x)
