"""
Straightener models.
"""

from .rotational_matrix import RotationalMatrix, RotationPair
from .straightener_eval import StraightenerEval
from .straightened_field import StraightenedField
from .omega_report import OmegaReport, OmegaSign

__all__ = [
    "RotationalMatrix",
    "RotationPair",
    "StraightenerEval",
    "StraightenedField",
    "OmegaReport",
    "OmegaSign",
]
