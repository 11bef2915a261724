"""
Vector field couples: invariant formal curves of singular vector fields,
admissible coordinate transformations and TRS normal forms.
"""

from .models import (
    VectorFieldJet,
    FormalCurve,
    InvariantCouple,
    CoordTransform,
    PolyTranslation,
    PolyRegularCT,
    DiagMonomialCT,
    RamificationCT,
    coord_chain_adapter,
    TransformChain,
    TRSVFForm,
    InvarianceReport,
    NormalizedCouple,
    VFReduction,
)
from .services import (
    check_invariance,
    apply_coord_transform,
    normalize_x_component,
    associated_linear_system,
    determinacy_shift,
    lift_gauge_chain,
    recognize_trs_vf,
    reduce_vf_trs,
    refine_trs,
)

__all__ = [
    "VectorFieldJet",
    "FormalCurve",
    "InvariantCouple",
    "CoordTransform",
    "PolyTranslation",
    "PolyRegularCT",
    "DiagMonomialCT",
    "RamificationCT",
    "coord_chain_adapter",
    "TransformChain",
    "TRSVFForm",
    "InvarianceReport",
    "NormalizedCouple",
    "VFReduction",
    "check_invariance",
    "apply_coord_transform",
    "normalize_x_component",
    "associated_linear_system",
    "determinacy_shift",
    "lift_gauge_chain",
    "recognize_trs_vf",
    "reduce_vf_trs",
    "refine_trs",
]
