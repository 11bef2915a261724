"""
Associated linear system service.
Linearizes a normalized field along its invariant curve.
"""

import logging

from ...series_core.models.poly_matrix import PolyMatrix
from ...linear_systems.models.linear_system import LinearSystem
from ..models.formal_curve import FormalCurve
from ..models.vector_field_jet import VectorFieldJet

logger = logging.getLogger(__name__)


def field_rank(eta: VectorFieldJet) -> int:
    """p such that eta_x = x^(p+1) exactly."""
    terms = eta.xi_x.terms
    if len(terms) != 1:
        raise ValueError("Normalized field must have eta_x = x^(p+1)")
    ((alpha, c),) = terms.items()
    if c != 1 or any(alpha[1:]):
        raise ValueError("Normalized field must have eta_x = x^(p+1)")
    return alpha[0] - 1


def jacobian_along(eta: VectorFieldJet, curve: FormalCurve) -> PolyMatrix:
    """A_ij(x) = d eta_yi / d y_j evaluated at y = Gamma(x)."""
    n = eta.n
    return PolyMatrix.from_rows(
        [[eta.xi_y[i].partial(j + 1).at_curve(curve.gamma_y) for j in range(n)] for i in range(n)]
    )


def associated_linear_system(eta: VectorFieldJet, curve: FormalCurve) -> LinearSystem:
    """
    x^(p+1) y' = A(x) y with A = d_y eta_y(x, Gamma(x)).

    Args:
        eta: Field with eta_x = x^(p+1), p >= 0
        curve: Invariant curve

    Returns:
        The system, with powers of x common to A factored into the rank

    Raises:
        ValueError: eta is not normalized or p < 0
        InsufficientPrecision: A vanishes to the known order
    """
    p = field_rank(eta)
    if p < 0:
        raise ValueError("A field transverse to x = 0 has no associated singular system")
    system = LinearSystem.from_matrix(p, jacobian_along(eta, curve))
    logger.debug(f"Associated linear system of size {system.n}, rank {system.p}")
    return system
