"""
Block compatibility of a residual part with an exponential part.
"""

import logging

from ...shared.errors import ShapeError
from ..models.block_structure import BlockKind, BlockStructure
from ..models.poly_matrix import PolyMatrix

logger = logging.getLogger(__name__)


def compatible(c: PolyMatrix, d: PolyMatrix, bs: BlockStructure) -> bool:
    """
    True iff C = Theta(C_1 + ... + C_k) + E_1 + ... + E_k' with bs's block sizes.

    On success the commutator DC - CD is checked to be the exact zero
    matrix; a nonzero commutator means D itself does not follow bs.

    Raises:
        ShapeError: sizes of C, D and bs disagree
    """
    if c.n != d.n or bs.dimension != c.n:
        raise ShapeError(f"Sizes disagree: C is {c.n}, D is {d.n}, block structure spans {bs.dimension}")
    spans = list(bs.spans())
    owner = [0] * c.n
    for index, (_, start, stop) in enumerate(spans):
        for i in range(start, stop):
            owner[i] = index
    for i in range(c.n):
        for j in range(c.n):
            if owner[i] != owner[j] and not c.entries[i][j].is_zero():
                return False
    for block, start, stop in spans:
        if block.kind != BlockKind.COMPLEX:
            continue
        for bi in range(start, stop, 2):
            for bj in range(start, stop, 2):
                a, b = c.entries[bi][bj], c.entries[bi][bj + 1]
                e, f = c.entries[bi + 1][bj], c.entries[bi + 1][bj + 1]
                if a != f or b != -e:
                    return False
    commutator = d @ c - c @ d
    if not commutator.is_zero():
        logger.warning("C follows the block pattern but does not commute with D")
        return False
    return True
