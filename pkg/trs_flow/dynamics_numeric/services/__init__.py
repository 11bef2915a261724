from .basin_probe import basin_probe, classify_seed
from .center_manifold_jet import center_manifold_jet, split_center
from .contact_report import contact_report
from .flat_contact_check import flat_contact_check
from .horn_membership import horn_membership
from .integrate import integrate
from .integrate_pair import integrate_pair
from .iterated_tangents import formal_iterated_tangents, iterated_tangents
from .shoot_asymptotic import shoot_asymptotic

__all__ = [
    "basin_probe",
    "center_manifold_jet",
    "classify_seed",
    "contact_report",
    "flat_contact_check",
    "formal_iterated_tangents",
    "horn_membership",
    "integrate",
    "integrate_pair",
    "iterated_tangents",
    "shoot_asymptotic",
    "split_center",
]
