"""
Linear systems services.
"""

from .apply_gauge import apply_gauge
from .is_admissible import is_admissible
from .diagonal_steps import diagonal_steps
from .recognize_trs import recognize_trs
from .compute_spectrum import compute_spectrum
from .has_good_spectrum import has_good_spectrum
from .kill_vestigial import kill_vestigial
from .reduce_linear_full import reduce_linear_full
from .no_dominant_rotation import no_dominant_rotation
from .unstability_index import unstability_index
from .exponential_part import exponential_entries, BlockPolynomial

__all__ = [
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
    "BlockPolynomial",
]
