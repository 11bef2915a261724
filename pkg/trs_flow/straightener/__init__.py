"""
Straightener: rotational matrices, the map (x, y) -> (x, Omega_R(x) y) and
straightened TRS fields.
"""

from .models import RotationalMatrix, RotationPair, StraightenerEval, StraightenedField, OmegaReport, OmegaSign
from .services import (
    extract_rotational,
    omega_eval,
    omega_inverse,
    straighten_field,
    verify_omega_properties,
    rotation_model_field,
)

__all__ = [
    "RotationalMatrix",
    "RotationPair",
    "StraightenerEval",
    "StraightenedField",
    "OmegaReport",
    "OmegaSign",
    "extract_rotational",
    "omega_eval",
    "omega_inverse",
    "straighten_field",
    "verify_omega_properties",
    "rotation_model_field",
]
