"""
No dominant rotation predicate.
"""

from ...series_core.models.block_structure import BlockStructure
from ...series_core.models.poly_matrix import PolyMatrix
from .exponential_part import exponential_entries


def no_dominant_rotation(d: PolyMatrix, bs: BlockStructure) -> bool:
    """True iff ord Re(c_j) <= ord Im(c_j) for every complex block."""
    for entry in exponential_entries(d, bs):
        if entry.imag is None:
            continue
        re, im = entry.real.order(), entry.imag.order()
        if im is None:
            continue
        if re is None or re > im:
            return False
    return True
