"""
Numerical companion: integration near x = 0, contact certification, center
manifold jets, basin probes and iterated tangents.
"""

from .models import (
    BasinReport,
    CenterManifoldJet,
    ContactOrder,
    ContactReport,
    FieldEvaluator,
    FlatContactReport,
    HornSpec,
    IteratedTangents,
    NumericTrajectory,
    SeedVerdict,
    ShootResult,
)
from .services import (
    basin_probe,
    center_manifold_jet,
    contact_report,
    flat_contact_check,
    formal_iterated_tangents,
    horn_membership,
    integrate,
    integrate_pair,
    iterated_tangents,
    shoot_asymptotic,
)

__all__ = [
    "BasinReport",
    "CenterManifoldJet",
    "ContactOrder",
    "ContactReport",
    "FieldEvaluator",
    "FlatContactReport",
    "HornSpec",
    "IteratedTangents",
    "NumericTrajectory",
    "SeedVerdict",
    "ShootResult",
    "basin_probe",
    "center_manifold_jet",
    "contact_report",
    "flat_contact_check",
    "formal_iterated_tangents",
    "horn_membership",
    "integrate",
    "integrate_pair",
    "iterated_tangents",
    "shoot_asymptotic",
]
