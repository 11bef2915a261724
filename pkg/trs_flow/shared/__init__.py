"""
Shared package.
Error hierarchy and rational codec used by every module.
"""

from .errors import (
    TrsFlowError,
    UnitRequired,
    EmptyPrecision,
    InsufficientPrecision,
    NotDivisible,
    ShapeError,
    Inadmissible,
    NotRegular,
    Obstruction,
    Undecidable,
    FuelExhausted,
    DegenerateCurve,
    InvarianceViolated,
    HypothesisViolated,
    DomainError,
    Escape,
    SeedTooCoarse,
    InsufficientWindow,
    TangentUndefined,
)
from .rational import parse_rational, format_rational, to_fraction

__all__ = [
    "TrsFlowError",
    "UnitRequired",
    "EmptyPrecision",
    "InsufficientPrecision",
    "NotDivisible",
    "ShapeError",
    "Inadmissible",
    "NotRegular",
    "Obstruction",
    "Undecidable",
    "FuelExhausted",
    "DegenerateCurve",
    "InvarianceViolated",
    "HypothesisViolated",
    "DomainError",
    "Escape",
    "SeedTooCoarse",
    "InsufficientWindow",
    "TangentUndefined",
    "parse_rational",
    "format_rational",
    "to_fraction",
]
