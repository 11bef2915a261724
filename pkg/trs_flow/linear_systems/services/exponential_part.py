"""
Exponential part helpers.
Reads the eigen-polynomials c_j = a_j + i b_j and d_j off a block-diagonal D.
"""

from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict

from ...series_core.models.block_structure import Block, BlockKind, BlockStructure
from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.models.truncated_series import TruncatedSeries
from ...shared.errors import ShapeError


class BlockPolynomial(BaseModel):
    """Eigen-polynomial of one block; imag is None for real blocks."""

    model_config = ConfigDict(frozen=True)

    block: Block
    start: int
    stop: int
    real: TruncatedSeries
    imag: Optional[TruncatedSeries] = None


def exponential_entries(d: PolyMatrix, bs: BlockStructure) -> Iterator[BlockPolynomial]:
    if bs.dimension != d.n:
        raise ShapeError(f"Block structure spans {bs.dimension} coordinates, D has {d.n}")
    for block, start, stop in bs.spans():
        if block.kind == BlockKind.COMPLEX:
            yield BlockPolynomial(block=block, start=start, stop=stop, real=d.entry(start, start), imag=d.entry(start + 1, start))
        else:
            yield BlockPolynomial(block=block, start=start, stop=stop, real=d.entry(start, start))
