"""
Unstability index service.
"""

import logging

from ...series_core.models.block_structure import BlockStructure
from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.models.truncated_series import TruncatedSeries
from ...shared.errors import Undecidable
from .exponential_part import exponential_entries

logger = logging.getLogger(__name__)


def _positive(series: TruncatedSeries, label: str) -> bool:
    """Sign of a polynomial for small x > 0: sign of its lowest nonzero coefficient."""
    v = series.order()
    if v is None:
        raise Undecidable(f"{label} vanishes to truncation {series.trunc}; its sign is unknown")
    return series.coeffs[v] > 0


def unstability_index(d: PolyMatrix, bs: BlockStructure) -> int:
    """
    Count the unstable directions of the exponential part.

    Every coordinate whose eigen-polynomial has positive real part for small
    x > 0 counts once, so a complex c_j with Re(c_j) > 0 contributes 2.

    Raises:
        Undecidable: Some Re(c_j) or d_j is zero to known precision
    """
    index = 0
    for entry in exponential_entries(d, bs):
        label = f"block at {entry.start}"
        if _positive(entry.real, label):
            index += entry.block.width
    logger.debug(f"Unstability index {index}")
    return index
