"""
Good spectrum predicate.
"""

import logging
from typing import Optional, Union

from ...series_core.models.poly_matrix import ConstMatrix, PolyMatrix
from ...settings import get_settings
from .compute_spectrum import integer_gap, spectral_values

logger = logging.getLogger(__name__)


def has_good_spectrum(c: Union[PolyMatrix, ConstMatrix], cluster_tol: Optional[float] = None) -> bool:
    """
    True iff no two eigenvalues of C differ by a nonzero integer.

    Args:
        c: Constant matrix
        cluster_tol: Separation tolerance for numerically solved eigenvalues

    Raises:
        Undecidable: A float difference is too close to a nonzero integer
    """
    tol = cluster_tol if cluster_tol is not None else get_settings().cluster_tol
    values = spectral_values(c)
    for i, a in enumerate(values):
        for b in values[i + 1:]:
            gap = integer_gap(a, b, tol)
            if gap:
                logger.debug(f"Eigenvalues {a.approx:.6g} and {b.approx:.6g} differ by {gap}")
                return False
    return True
