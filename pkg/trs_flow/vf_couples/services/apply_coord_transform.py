"""
Apply coordinate transformation service.
Pulls a couple back by an admissible transformation of (x, y).
"""

import logging
from fractions import Fraction

from ...series_core.models.multi_series import MultiSeries
from ...series_core.models.truncated_series import TruncatedSeries
from ...linear_systems.services.apply_gauge import as_polynomial
from ...shared.errors import Inadmissible, ShapeError, TrsFlowError
from ..models.coord_transform import (
    CoordTransform,
    DiagMonomialCT,
    PolyRegularCT,
    PolyTranslation,
    RamificationCT,
)
from ..models.formal_curve import FormalCurve
from ..models.invariant_couple import InvariantCouple
from ..models.vector_field_jet import VectorFieldJet

logger = logging.getLogger(__name__)


def _polynomial(series: TruncatedSeries, trunc: int) -> TruncatedSeries:
    return TruncatedSeries.make(list(series.coeffs), max(series.trunc, trunc))


def _compose(vf: VectorFieldJet, x_image: MultiSeries, y_images: list[MultiSeries]) -> list[MultiSeries]:
    return [c.substitute(x_image, y_images) for c in vf.components()]


def _translate(couple: InvariantCouple, t: PolyTranslation) -> InvariantCouple:
    vf, n, k = couple.vf, couple.n, couple.vf.trunc
    if len(t.beta) != n:
        raise ShapeError(f"Translation has {len(t.beta)} components for {n} y variables")
    beta = [_polynomial(b, k + 1) for b in t.beta]
    x_image = MultiSeries.variable(0, n, k)
    y_images = [MultiSeries.from_x_series(b, n).truncate(k) + MultiSeries.variable(i + 1, n, k) for i, b in enumerate(beta)]
    f_x, *f_y = _compose(vf, x_image, y_images)
    new_y = [f_y[i] - f_x * MultiSeries.from_x_series(beta[i].derivative(), n) for i in range(n)]
    curve = FormalCurve.make([g - _polynomial(b, g.trunc).truncate(g.trunc) for g, b in zip(couple.curve.gamma_y, t.beta)])
    return InvariantCouple(vf=VectorFieldJet.make(f_x, new_y), curve=curve)


def _regular(couple: InvariantCouple, t: PolyRegularCT) -> InvariantCouple:
    vf, n, k = couple.vf, couple.n, couple.vf.trunc
    if t.P.n != n:
        raise ShapeError(f"Matrix size {t.P.n} does not match {n} y variables")
    top = max(k, couple.curve.trunc) + 1
    p_mat = as_polynomial(t.P, top)
    p_inv = p_mat.inverse()
    p_der = p_mat.derivative()
    ys = [MultiSeries.variable(j + 1, n, k) for j in range(n)]

    def embed(series: TruncatedSeries) -> MultiSeries:
        return MultiSeries.from_x_series(series, n)

    x_image = MultiSeries.variable(0, n, k)
    y_images = [sum((embed(p_mat.entry(i, j)) * ys[j] for j in range(n)), MultiSeries.zero(n, k)) for i in range(n)]
    f_x, *f_y = _compose(vf, x_image, y_images)
    w = [f_y[i] - f_x * sum((embed(p_der.entry(i, j)) * ys[j] for j in range(n)), MultiSeries.zero(n, k)) for i in range(n)]
    new_y = [sum((embed(p_inv.entry(i, j)) * w[j] for j in range(n)), MultiSeries.zero(n, k)) for i in range(n)]

    gamma = couple.curve.gamma_y
    g_trunc = couple.curve.trunc
    components = []
    for i in range(n):
        acc = TruncatedSeries.zero(g_trunc)
        for j in range(n):
            acc = acc + p_inv.entry(i, j) * gamma[j]
        components.append(acc.truncate(g_trunc))
    return InvariantCouple(vf=VectorFieldJet.make(f_x, new_y), curve=FormalCurve.make(components))


def _blow_up(couple: InvariantCouple, t: DiagMonomialCT) -> InvariantCouple:
    vf, n, k = couple.vf, couple.n, couple.vf.trunc
    if t.k > n:
        raise ShapeError(f"Cannot blow up {t.k} of {n} coordinates")
    if not couple.curve.contact_at_least(2):
        raise Inadmissible(f"Curve has contact order {couple.curve.contact_order()} < 2 with y = 0")
    for index, comp in enumerate(vf.components()[: t.k + 1]):
        for a in comp.terms:
            if a[0] == 0 and not any(a[1: t.k + 1]):
                raise Inadmissible(f"Center x = y_1..y_{t.k} = 0 is not invariant: component {index} has term {a}")
    x = MultiSeries.variable(0, n, k)
    ys = [MultiSeries.variable(i + 1, n, k) for i in range(n)]
    y_images = [x * ys[i] if i < t.k else ys[i] for i in range(n)]
    f_x, *f_y = _compose(vf, x, y_images)
    new_y = [(f_y[i] - f_x * ys[i]).exact_divide(1) if i < t.k else f_y[i] for i in range(n)]
    gamma = couple.curve.gamma_y
    curve = FormalCurve.make([g.exact_divide(1) if i < t.k else g for i, g in enumerate(gamma)])
    return InvariantCouple(vf=VectorFieldJet.make(f_x, new_y), curve=curve)


def _ramify(couple: InvariantCouple, t: RamificationCT) -> InvariantCouple:
    vf, n, k = couple.vf, couple.n, couple.vf.trunc
    for a in vf.xi_x.terms:
        if a[0] == 0:
            raise Inadmissible(f"x = 0 is not invariant: xi_x has term {a}")
    x_image = MultiSeries.monomial([t.r] + [0] * n, 1, n, k)
    y_images = [MultiSeries.variable(i + 1, n, k) for i in range(n)]
    f_x, *f_y = _compose(vf, x_image, y_images)
    new_x = f_x.exact_divide(t.r - 1).scale(Fraction(1, t.r))
    curve = FormalCurve.make([g.ramify(t.r) for g in couple.curve.gamma_y])
    return InvariantCouple(vf=VectorFieldJet.make(new_x, f_y), curve=curve)


def apply_coord_transform(couple: InvariantCouple, transform: CoordTransform) -> InvariantCouple:
    """
    Transform (xi, Gamma) by phi.

    Translation y = beta + y~ gives xi~_y = xi_y o phi - (xi_x o phi) beta'.
    Regular y = P y~ gives xi~_y = P^-1 (xi_y o phi - (xi_x o phi) P' y~).
    A blow-up of the first k coordinates divides (xi_yi o phi - (xi_x o phi) y~_i)
    by x. Ramification x = x~^r gives xi~_x = x~^(1-r) (xi_x o phi) / r.

    Args:
        couple: Couple in adapted coordinates
        transform: Transformation phi

    Returns:
        The couple (phi^* xi, phi^* Gamma)

    Raises:
        Inadmissible: Center not invariant, contact below 2, or x = 0 not invariant
        ShapeError: Transformation size differs from the couple's
    """
    try:
        if isinstance(transform, PolyTranslation):
            result = _translate(couple, transform)
        elif isinstance(transform, PolyRegularCT):
            result = _regular(couple, transform)
        elif isinstance(transform, DiagMonomialCT):
            result = _blow_up(couple, transform)
        elif isinstance(transform, RamificationCT):
            result = _ramify(couple, transform)
        else:
            raise TypeError(f"Unknown coordinate transformation {type(transform).__name__}")

        logger.debug(f"Applied {transform.kind}: field trunc {couple.vf.trunc} -> {result.vf.trunc}")
        return result
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Failed to apply {getattr(transform, 'kind', '?')} transformation: {str(e)}")
        raise
