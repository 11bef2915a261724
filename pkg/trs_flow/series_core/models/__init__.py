"""
Series core models.
"""

from .truncated_series import TruncatedSeries
from .complex_series import ComplexSeries
from .multi_series import MultiSeries
from .poly_matrix import PolyMatrix, ConstMatrix
from .block_structure import BlockStructure, Block, BlockKind

__all__ = [
    "TruncatedSeries",
    "ComplexSeries",
    "MultiSeries",
    "PolyMatrix",
    "ConstMatrix",
    "BlockStructure",
    "Block",
    "BlockKind",
]
