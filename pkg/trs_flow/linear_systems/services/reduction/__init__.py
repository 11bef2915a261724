"""
Building blocks of the full linear reduction.
"""

from .state import ReductionState, Segment, first_open_segment, segment_level
from .split_series import split_series, block_projection, theta_projection
from .split_segment import split_eigenclasses, pair_complex
from .shear import reduce_nilpotent, moser_measure, newton_slope
from .residual_shift import shift_residual

__all__ = [
    "ReductionState",
    "Segment",
    "first_open_segment",
    "segment_level",
    "split_series",
    "block_projection",
    "theta_projection",
    "split_eigenclasses",
    "pair_complex",
    "reduce_nilpotent",
    "moser_measure",
    "newton_slope",
    "shift_residual",
]
