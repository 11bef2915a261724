"""
Center manifold service.
Solves the invariance equation of w = h(x, z) degree by degree for a TRS field.
"""

import logging
from fractions import Fraction

from ...series_core.models.multi_series import Alpha, MultiSeries
from ...series_core.services.linear_algebra import invert
from ...shared.errors import ShapeError, TrsFlowError
from ...vf_couples.models.trs_vf_form import TRSVFForm
from ..models.center_manifold_jet import CenterManifoldJet

logger = logging.getLogger(__name__)


def split_center(form: TRSVFForm) -> tuple[list[int], list[int]]:
    """Coordinates of blocks with D(0) = 0 (center) and the rest (hyperbolic)."""
    d0 = form.D.at_zero()
    center: list[int] = []
    hyperbolic: list[int] = []
    for _, start, stop in form.bs.spans():
        idle = form.q == 0 or all(d0[i][j] == 0 for i in range(start, stop) for j in range(start, stop))
        (center if idle else hyperbolic).extend(range(start, stop))
    return center, hyperbolic


def center_manifold_jet(form: TRSVFForm, K: int) -> CenterManifoldJet:
    """
    Jet through total degree K of the center manifold graph of the normalized field.

    With F the y-part of x^(q+1) d/dx + [(D + x^q C) y + x^(q+1+N) V] . d/dy,
    h solves F_w(x, z, h) = x^(q+1) h_x + sum_i h_(z_i) F_(z_i)(x, z, h). At each
    degree the unknown enters only through D_w(0) h, which is inverted.

    Args:
        form: TRS form of type (q, N, M)
        K: Target total degree

    Returns:
        The jet, with whether every component is divisible by x^(q+1+N)

    Raises:
        ShapeError: D(0) is not invertible on the hyperbolic coordinates
    """
    if K < 1:
        raise ValueError("Center manifold jet needs K >= 1")
    q = form.q
    flat_power = q + 1 + form.N
    z_index, w_index = split_center(form)
    logger.info(f"Center manifold: {len(z_index)} center and {len(w_index)} hyperbolic coordinates")
    if not w_index:
        return CenterManifoldJet(
            K=K, z_index=tuple(z_index), w_index=(), h=(), flat_power=flat_power, divisible=True
        )

    try:
        d0 = form.D.at_zero()
        a_inv = invert([[d0[i][j] for j in w_index] for i in w_index])
        if a_inv is None:
            raise ShapeError("D(0) is singular on the hyperbolic coordinates")

        c = len(z_index)
        field = form.normalized_field(K)
        x_image = MultiSeries.variable(0, c, K)
        h = [MultiSeries.zero(c, K) for _ in w_index]
        for degree in range(2, K + 1):
            images = [MultiSeries.zero(c, K)] * form.n
            for pos, i in enumerate(z_index):
                images[i] = MultiSeries.variable(pos + 1, c, K)
            for pos, i in enumerate(w_index):
                images[i] = h[pos]
            composed = [comp.substitute(x_image, images) for comp in field.xi_y]

            residuals = []
            for pos, i in enumerate(w_index):
                r = composed[i] - h[pos].partial(0).shift_x(q + 1)
                for zpos, j in enumerate(z_index):
                    r = r - h[pos].partial(zpos + 1) * composed[j]
                residuals.append(r)

            keys: set[Alpha] = {a for r in residuals for a in r.terms if sum(a) == degree}
            updates: list[dict[Alpha, Fraction]] = [{} for _ in w_index]
            for alpha in keys:
                rhs = [r.terms.get(alpha, Fraction(0)) for r in residuals]
                for row in range(len(w_index)):
                    value = -sum((a_inv[row][col] * rhs[col] for col in range(len(w_index))), Fraction(0))
                    if value != 0:
                        updates[row][alpha] = value
            h = [part + MultiSeries.make(c, K, upd) for part, upd in zip(h, updates)]

        divisible = all(a[0] >= flat_power for part in h for a in part.terms)
        logger.info(f"Center manifold jet through degree {K}; divisible by x^{flat_power}: {divisible}")
        return CenterManifoldJet(
            K=K, z_index=tuple(z_index), w_index=tuple(w_index), h=tuple(h), flat_power=flat_power, divisible=divisible
        )
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Center manifold computation failed: {str(e)}")
        raise
