"""
Vector field couple models.
"""

from .vector_field_jet import VectorFieldJet
from .formal_curve import FormalCurve
from .invariant_couple import InvariantCouple
from .coord_transform import (
    CoordTransform,
    PolyTranslation,
    PolyRegularCT,
    DiagMonomialCT,
    RamificationCT,
    coord_chain_adapter,
)
from .transform_chain import TransformChain
from .trs_vf_form import TRSVFForm
from .results import InvarianceReport, NormalizedCouple, VFReduction

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
]
