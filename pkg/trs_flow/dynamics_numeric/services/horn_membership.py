"""
Horn membership service.
"""

from typing import Sequence

import numpy as np

from ..models.horn_spec import HornSpec


def horn_membership(x: float, y: Sequence[float], horn: HornSpec) -> bool:
    """True when 0 < x < eps and ||y - j_k Gamma(x)|| < C x^k (both strict)."""
    if not 0 < x < horn.eps:
        return False
    return float(np.linalg.norm(np.asarray(y, dtype=float) - horn.center(x))) < horn.radius(x)
