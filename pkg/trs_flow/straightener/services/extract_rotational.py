"""
Extract rotational service.
Collects the dominant rotations of an exponential part.
"""

import logging
from typing import Optional

from ...linear_systems.services.exponential_part import exponential_entries
from ...series_core.models.block_structure import BlockStructure
from ...series_core.models.poly_matrix import PolyMatrix
from ..models.rotational_matrix import RotationalMatrix, RotationPair

logger = logging.getLogger(__name__)


def extract_rotational(d: PolyMatrix, bs: BlockStructure, q: int) -> Optional[RotationalMatrix]:
    """
    Build R from the initial imaginary jets of dominant blocks.

    A complex block c = a + i b dominates when ord a > ord b; its pairs get
    b_l = j_(v-1)(b) with v = ord a (v = q when a vanishes).

    Args:
        d: Exponential part of a TRS form of rank q
        bs: Block structure of d
        q: Poincare rank

    Returns:
        Rotational matrix of degree q - 1, or None without dominant rotation
    """
    pairs: list[RotationPair] = []
    for entry in exponential_entries(d, bs):
        if entry.imag is None:
            continue
        im = entry.imag.order()
        if im is None or im >= q:
            continue
        re = entry.real.order()
        v = q if re is None or re >= q else re
        if v <= im:
            continue
        jet = entry.imag.coeffs[:v]
        for offset in range(entry.start, entry.stop, 2):
            pairs.append(RotationPair(start=offset, b=tuple(jet)))
        logger.debug(f"Dominant rotation on block at {entry.start}: ord Re = {v}, ord Im = {im}")
    if not pairs:
        return None
    return RotationalMatrix(n=d.n, degree=max(q - 1, 0), pairs=tuple(pairs))
