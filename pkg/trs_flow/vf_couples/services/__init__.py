"""
Vector field couple services.
"""

from .check_invariance import check_invariance
from .apply_coord_transform import apply_coord_transform
from .normalize_x_component import normalize_x_component, factor_field, curve_translation
from .associated_linear_system import associated_linear_system, jacobian_along, field_rank
from .determinacy_shift import determinacy_shift
from .lift_gauge_chain import lift_gauge_chain
from .recognize_trs_vf import recognize_trs_vf, split_unit
from .reduce_vf_trs import reduce_vf_trs
from .refine_trs import refine_trs

__all__ = [
    "check_invariance",
    "apply_coord_transform",
    "normalize_x_component",
    "factor_field",
    "curve_translation",
    "associated_linear_system",
    "jacobian_along",
    "field_rank",
    "determinacy_shift",
    "lift_gauge_chain",
    "recognize_trs_vf",
    "split_unit",
    "reduce_vf_trs",
    "refine_trs",
]
