"""
Normalize x-component service.
Translates and blows up a couple until xi = x^e u (x^(p+1) d/dx + eta_y . d/dy).
"""

import logging

from ...series_core.models.multi_series import MultiSeries
from ...series_core.models.truncated_series import TruncatedSeries
from ...shared.errors import (
    DegenerateCurve,
    EmptyPrecision,
    Inadmissible,
    InsufficientPrecision,
    InvarianceViolated,
    NotDivisible,
    TrsFlowError,
)
from ..models.coord_transform import CoordTransform, DiagMonomialCT, PolyTranslation
from ..models.invariant_couple import InvariantCouple
from ..models.results import NormalizedCouple
from ..models.transform_chain import TransformChain
from ..models.vector_field_jet import VectorFieldJet
from .check_invariance import check_invariance

logger = logging.getLogger(__name__)


def curve_translation(couple: InvariantCouple, k: int) -> list[CoordTransform]:
    """Translation by j_k(Gamma_y), or nothing when that jet is zero."""
    beta = tuple(TruncatedSeries.make(g.coeffs[: k + 1], k) for g in couple.curve.gamma_y)
    if all(b.is_zero() for b in beta):
        return []
    return [PolyTranslation(beta=beta)]


def factor_field(couple: InvariantCouple, m: int, chain: TransformChain) -> NormalizedCouple:
    """
    Factor xi = x^e u (x^(p+1) d/dx + eta_y . d/dy) once xi_x = x^m u.

    e <= m is the largest power of x dividing u^-1 xi_y, so x does not divide
    the normalized field.
    """
    vf = couple.vf
    try:
        unit = vf.xi_x.exact_divide(m)
    except NotDivisible as e:
        raise InsufficientPrecision(f"xi_x is not x^{m} times a unit to known order: {e}") from e
    except EmptyPrecision as e:
        raise InsufficientPrecision(f"Field jet too short to factor x^{m}: {e}") from e
    if not unit.is_unit():
        raise InsufficientPrecision(f"xi_x / x^{m} does not start with a nonzero constant")
    scaled = [c * unit.reciprocal() for c in vf.xi_y]
    orders = [v for c in scaled if (v := c.x_order()) is not None]
    e = min([m] + orders)
    eta_y = [c.exact_divide(e) for c in scaled]
    p = m - e - 1
    eta_x = MultiSeries.monomial([p + 1] + [0] * vf.n, 1, vf.n, eta_y[0].trunc)
    eta = VectorFieldJet.make(eta_x, eta_y)
    logger.debug(f"Factored field: m = {m}, e = {e}, p = {p}")
    return NormalizedCouple(couple=couple, chain=chain, m=m, e=e, p=p, unit=unit, eta=eta)


def normalize_x_component(couple: InvariantCouple) -> NormalizedCouple:
    """
    Bring the x-component of xi to x^m times a unit.

    The couple is translated by j_(m+1)(Gamma_y) and blown up m times at the
    origin, with m = ord_x xi_x(Gamma); the field is then factored.

    Args:
        couple: Couple with xi(0) = 0

    Returns:
        Normalized couple with e, p, u, eta and the transformations used

    Raises:
        Inadmissible: xi does not vanish at the origin
        InvarianceViolated: Gamma is not invariant
        DegenerateCurve: xi vanishes along Gamma
        InsufficientPrecision: The curve is not known through x^(m+1)
    """
    from .apply_coord_transform import apply_coord_transform

    try:
        if not couple.vf.vanishes_at_origin():
            raise Inadmissible("Field does not vanish at the origin")
        report = check_invariance(couple)
        if not report.holds:
            raise InvarianceViolated(f"Curve is not invariant: residual at x^{report.failing_order}")
        if report.m is None:
            raise DegenerateCurve("xi_x vanishes along the curve")
        m = report.m
        if couple.curve.trunc < m + 1:
            raise InsufficientPrecision(f"Curve known through x^{couple.curve.trunc}, need x^{m + 1}")

        steps = curve_translation(couple, m + 1) + [DiagMonomialCT(k=couple.n) for _ in range(m)]
        current = couple
        for step in steps:
            current = apply_coord_transform(current, step)
        logger.info(f"Normalized x-component with m = {m} using {len(steps)} transformations")
        return factor_field(current, m, TransformChain(steps=steps))
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Normalization failed: {str(e)}")
        raise
