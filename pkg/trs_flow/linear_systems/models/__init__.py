"""
Linear systems models.
"""

from .linear_system import LinearSystem
from .gauge_transform import GaugeTransform, PolyRegular, DiagMonomial, Ramification, gauge_chain_adapter
from .trs_linear_form import TRSLinearForm
from .spectrum import Spectrum, Eigenvalue
from .reduction_result import ReductionResult

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
]
