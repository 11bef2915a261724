"""
Admissibility service.
Decides whether a gauge keeps the transformed matrix free of poles.
"""

import logging

from ...shared.errors import Inadmissible, ShapeError
from ..models.gauge_transform import DiagMonomial, GaugeTransform, PolyRegular, Ramification
from ..models.linear_system import LinearSystem
from .diagonal_steps import walk_diagonal_steps

logger = logging.getLogger(__name__)


def is_admissible(system: LinearSystem, transform: GaugeTransform) -> bool:
    """
    Check whether the gauge maps the system to a holomorphic matrix.

    Polynomial regular gauges always are; a ramification needs a singular
    system; a diagonal monomial gauge is split into elementary steps and each
    step must find x dividing the entries it divides by x.

    Raises:
        InsufficientPrecision: Truncation too short to decide divisibility
        ShapeError: Exponent count differs from the system size
    """
    if isinstance(transform, PolyRegular):
        return True
    if isinstance(transform, Ramification):
        return system.p >= 0
    if isinstance(transform, DiagMonomial):
        if len(transform.exponents) != system.n:
            raise ShapeError(f"{len(transform.exponents)} exponents for a system of size {system.n}")
        try:
            walk_diagonal_steps(system, transform.exponents)
        except Inadmissible as e:
            logger.debug(f"Diagonal gauge {transform.exponents} rejected: {e}")
            return False
        return True
    raise TypeError(f"Unknown gauge {type(transform).__name__}")
