"""
Residual normalization.
Shifts eigenvalues of the residual part by integers until no two differ by a
nonzero integer.
"""

import logging
from fractions import Fraction
from typing import Optional

from ....series_core.services.linear_algebra import (
    charpoly_factors,
    columns_to_matrix,
    matrix_power,
    nullspace,
    polynomial_at_matrix,
)
from ....settings import get_settings
from ....shared.errors import Undecidable
from ..compute_spectrum import SpectralValue, integer_gap, spectral_values
from .state import ReductionState, Segment, block_coefficient

logger = logging.getLogger(__name__)


def _resonant_target(state: ReductionState, cluster_tol: float) -> Optional[tuple[Segment, SpectralValue]]:
    """The eigenvalue with largest real part that exceeds another by a positive integer."""
    located: list[tuple[Segment, SpectralValue]] = []
    for segment in state.segments:
        for value in spectral_values(block_coefficient(state.system, segment, state.system.p)):
            located.append((segment, value))
    best: Optional[tuple[Segment, SpectralValue]] = None
    for segment, a in located:
        for _, b in located:
            gap = integer_gap(a, b, cluster_tol)
            if gap is not None and gap > 0 and (best is None or a.approx.real > best[1].approx.real):
                best = (segment, a)
    return best


def shift_residual(state: ReductionState, cluster_tol: Optional[float] = None) -> bool:
    """
    Lower one resonant eigenclass by 1 with a diagonal monomial gauge.

    Returns:
        False when the residual part already has good spectrum

    Raises:
        Undecidable: A resonant complex block mixes several eigenclasses
    """
    tol = cluster_tol if cluster_tol is not None else get_settings().cluster_tol
    target = _resonant_target(state, tol)
    if target is None:
        return False
    segment, value = target
    residual = block_coefficient(state.system, segment, state.system.p)
    factors = charpoly_factors(residual)
    if len(factors) == 1:
        width = segment.size
    else:
        if segment.complex_block:
            raise Undecidable("Resonant complex block carries several eigenclasses")
        chosen = [f for f in factors if tuple(f[0]) == value.factor]
        others = [f for f in factors if tuple(f[0]) != value.factor]
        basis = nullspace(matrix_power(polynomial_at_matrix(chosen[0][0], residual), chosen[0][1]))
        rest: list[list[Fraction]] = []
        for coeffs, mult in others:
            rest.extend(nullspace(matrix_power(polynomial_at_matrix(coeffs, residual), mult)))
        state.apply_similarity(segment, columns_to_matrix(basis + rest))
        width = len(basis)
    state.shift(list(range(segment.start, segment.start + width)))
    logger.info(f"Residual eigenvalue {value.approx:.6g} shifted down by 1")
    return True
