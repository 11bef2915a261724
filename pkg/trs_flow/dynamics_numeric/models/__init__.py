from .basin_report import BasinReport, LineProbe, SeedOutcome, SeedVerdict
from .center_manifold_jet import CenterManifoldJet
from .contact_report import ContactOrder, ContactReport, FlatContactReport, ShootResult
from .field_evaluator import FieldEvaluator
from .horn_spec import HornSpec
from .iterated_tangents import IteratedTangents
from .numeric_trajectory import NumericTrajectory

__all__ = [
    "BasinReport",
    "CenterManifoldJet",
    "ContactOrder",
    "ContactReport",
    "FieldEvaluator",
    "FlatContactReport",
    "HornSpec",
    "IteratedTangents",
    "LineProbe",
    "NumericTrajectory",
    "SeedOutcome",
    "SeedVerdict",
    "ShootResult",
]
