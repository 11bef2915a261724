"""
Series core: exact truncated series, polynomial matrices and block structures.
"""

from .models import (
    TruncatedSeries,
    ComplexSeries,
    MultiSeries,
    PolyMatrix,
    ConstMatrix,
    BlockStructure,
    Block,
    BlockKind,
)
from .services import (
    series_arith,
    SeriesOp,
    ord_jet,
    theta_embed,
    direct_sum,
    compatible,
    exact_divide,
)

__all__ = [
    "TruncatedSeries",
    "ComplexSeries",
    "MultiSeries",
    "PolyMatrix",
    "ConstMatrix",
    "BlockStructure",
    "Block",
    "BlockKind",
    "series_arith",
    "SeriesOp",
    "ord_jet",
    "theta_embed",
    "direct_sum",
    "compatible",
    "exact_divide",
]
