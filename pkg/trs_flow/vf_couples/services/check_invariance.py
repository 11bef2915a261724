"""
Invariance check service.
Verifies xi_x(x, Gamma(x)) Gamma'(x) = xi_y(x, Gamma(x)) to the known order.
"""

import logging

from ...shared.errors import DegenerateCurve
from ..models.invariant_couple import InvariantCouple
from ..models.results import InvarianceReport

logger = logging.getLogger(__name__)


def check_invariance(couple: InvariantCouple) -> InvarianceReport:
    """
    Check that Gamma is an invariant curve of xi.

    Args:
        couple: Field jet and curve

    Returns:
        Report with the verified order, the first failing order if any, and
        m = ord_x xi_x(Gamma)

    Raises:
        DegenerateCurve: xi vanishes identically along Gamma to the known order
    """
    along = couple.vf.at_curve(couple.curve.gamma_y)
    f_x, f_y = along[0], along[1:]
    if all(f.is_zero() for f in along):
        raise DegenerateCurve("Field vanishes identically along the curve; xi(Gamma) = 0 is excluded")

    residuals = [f_x * g - f for g, f in zip(couple.curve.derivative(), f_y)]
    verified = min(r.trunc for r in residuals)
    orders = [v for r in residuals if (v := r.truncate(verified).order()) is not None]
    failing = min(orders) if orders else None
    m = f_x.order()
    if failing is None:
        logger.debug(f"Curve invariant through x^{verified}, m = {m}")
    else:
        logger.info(f"Invariance fails at x^{failing}")
    return InvarianceReport(holds=failing is None, verified_order=verified, m=m, failing_order=failing)
