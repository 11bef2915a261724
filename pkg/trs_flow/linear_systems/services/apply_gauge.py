"""
Apply gauge service.
Transforms a linear system by a polynomial, diagonal monomial or ramification gauge.
"""

import logging

from ...series_core.models.poly_matrix import PolyMatrix
from ...shared.errors import Inadmissible, ShapeError, TrsFlowError
from ..models.gauge_transform import DiagMonomial, GaugeTransform, PolyRegular, Ramification
from ..models.linear_system import LinearSystem
from .diagonal_steps import walk_diagonal_steps

logger = logging.getLogger(__name__)


def as_polynomial(p: PolyMatrix, trunc: int) -> PolyMatrix:
    """Read a polynomial gauge matrix at a (possibly larger) truncation order."""
    if p.trunc >= trunc:
        return p
    return PolyMatrix.from_coefficients([[e.coeffs for e in row] for row in p.entries], trunc)


def apply_gauge(system: LinearSystem, transform: GaugeTransform) -> LinearSystem:
    """
    Transform x^(p+1) y' = A y by y = T z (or x = z^r).

    PolyRegular and DiagMonomial give B = T^-1 A T - x^(p+1) T^-1 T' with the
    largest admissible power of x factored out. Ramification gives rank r*p and
    matrix r * A(z^r): the factor r comes from dx = r z^(r-1) dz and stays in
    the matrix, so eigenvalues of the leading term scale by r.

    Args:
        system: The input system
        transform: Gauge to apply

    Returns:
        The transformed, normalized system

    Raises:
        Inadmissible: The gauge introduces a pole or ramifies a regular system
        NotRegular: PolyRegular with singular P(0)
        ShapeError: Gauge size differs from the system size
    """
    try:
        if isinstance(transform, PolyRegular):
            if transform.P.n != system.n:
                raise ShapeError(f"Gauge size {transform.P.n} does not match system size {system.n}")
            p_mat = as_polynomial(transform.P, system.trunc + 1)
            p_inv = p_mat.inverse()
            m = p_inv @ system.A @ p_mat
            if not transform.P.is_constant():
                m = m - (p_inv @ p_mat.derivative()).shift(system.p + 1)
            result = LinearSystem.from_matrix(system.p, m.truncate(min(m.trunc, system.trunc)))
        elif isinstance(transform, DiagMonomial):
            if len(transform.exponents) != system.n:
                raise ShapeError(f"{len(transform.exponents)} exponents for a system of size {system.n}")
            result = walk_diagonal_steps(system, transform.exponents)
        elif isinstance(transform, Ramification):
            if system.p < 0:
                raise Inadmissible("Ramification applies to singular systems only")
            # x = z^r: dy/dz = r z^(r-1) x^-(p+1) A(z^r) y, so z^(r p + 1) dy/dz = r A(z^r) y
            result =LinearSystem(n=system.n, p=transform.r * system.p, A=system.A.ramify(transform.r).scale(transform.r))
        else:
            raise TypeError(f"Unknown gauge {type(transform).__name__}")

        logger.debug(f"Applied {transform.kind} gauge: rank {system.p} -> {result.p}, trunc {result.trunc}")
        return result
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Failed to apply {getattr(transform, 'kind', '?')} gauge: {str(e)}")
        raise
