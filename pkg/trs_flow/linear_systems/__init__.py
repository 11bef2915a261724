"""
Linear systems: gauge calculus and TRS reduction of x^(p+1) y' = A(x) y.
"""

from .models import (
    LinearSystem,
    GaugeTransform,
    PolyRegular,
    DiagMonomial,
    Ramification,
    gauge_chain_adapter,
    TRSLinearForm,
    Spectrum,
    Eigenvalue,
    ReductionResult,
)
from .services import (
    apply_gauge,
    is_admissible,
    diagonal_steps,
    recognize_trs,
    compute_spectrum,
    has_good_spectrum,
    kill_vestigial,
    reduce_linear_full,
    no_dominant_rotation,
    unstability_index,
    exponential_entries,
)

__all__ = [
    "LinearSystem",
    "GaugeTransform",
    "PolyRegular",
    "DiagMonomial",
    "Ramification",
    "gauge_chain_adapter",
    "TRSLinearForm",
    "Spectrum",
    "Eigenvalue",
    "ReductionResult",
    "apply_gauge",
    "is_admissible",
    "diagonal_steps",
    "recognize_trs",
    "compute_spectrum",
    "has_good_spectrum",
    "kill_vestigial",
    "reduce_linear_full",
    "no_dominant_rotation",
    "unstability_index",
    "exponential_entries",
]
