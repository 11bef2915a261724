"""
Straightener services.
"""

from .extract_rotational import extract_rotational
from .omega_eval import omega_eval
from .omega_inverse import omega_inverse
from .straighten_field import straighten_field
from .verify_omega_properties import verify_omega_properties
from .rotation_model_field import rotation_model_field

__all__ = [
    "extract_rotational",
    "omega_eval",
    "omega_inverse",
    "straighten_field",
    "verify_omega_properties",
    "rotation_model_field",
]
