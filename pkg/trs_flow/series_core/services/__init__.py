"""
Series core services.
"""

from .series_arith import series_arith, SeriesOp
from .ord_jet import ord_jet
from .theta_embed import theta_embed
from .direct_sum import direct_sum
from .compatible import compatible
from .exact_divide import exact_divide

__all__ = [
    "series_arith",
    "SeriesOp",
    "ord_jet",
    "theta_embed",
    "direct_sum",
    "compatible",
    "exact_divide",
]
