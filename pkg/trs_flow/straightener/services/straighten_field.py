"""
Straighten field service.
Removes dominant rotation from a TRS field with the straightener.
"""

import logging
from typing import Optional

from ...linear_systems.services.apply_gauge import as_polynomial
from ...linear_systems.services.compute_spectrum import compute_spectrum
from ...linear_systems.services.no_dominant_rotation import no_dominant_rotation
from ...series_core.models.poly_matrix import PolyMatrix
from ...shared.errors import HypothesisViolated, ShapeError, TrsFlowError
from ...vf_couples.models.trs_vf_form import TRSVFForm
from ..models.rotational_matrix import RotationalMatrix
from ..models.straightened_field import StraightenedField
from ..models.straightener_eval import StraightenerEval

logger = logging.getLogger(__name__)


def _commutes(a: PolyMatrix, b: PolyMatrix) -> bool:
    return (a @ b - b @ a).is_zero()


def straighten_field(form: TRSVFForm, R: Optional[RotationalMatrix], strict: bool = True) -> StraightenedField:
    """
    Pull a TRS field of type (q, N + M, M) back by y = Omega(x) z.

    The straightener is built on -R, so that the exponential part becomes
    D - R; the result is divided by x^s with s = ord_x (D - R + x^q C) and is of
    type (q - s, N, 0) without dominant rotation.

    Args:
        form: TRS form with M-scaling
        R: Rotational matrix from extract_rotational, or None
        strict: Raise when floor(M / (q+1)) >= n (q+1+N) + 1 fails on a
            nonzero vestigial part, instead of warning

    Returns:
        Straightened field with its exact principal part

    Raises:
        ShapeError: R does not commute with D or C
        HypothesisViolated: Residual spectrum not in Re < 0, N < M, or the
            M bound fails
    """
    try:
        n, q = form.n, form.q
        rotation = R if R is not None else RotationalMatrix(n=n, degree=max(q - 1, 0))
        if rotation.n != n:
            raise ShapeError(f"Rotational matrix of size {rotation.n} for a field of size {n}")
        if form.N < form.M:
            raise HypothesisViolated(f"Type ({q}, {form.N}, {form.M}) has N < M")
        flatness = form.N - form.M

        spectrum = compute_spectrum(form.C)
        if not spectrum.max_real_part() < 0:
            raise HypothesisViolated(f"Residual spectrum reaches Re = {spectrum.max_real_part():g}")
        bound = n * (q + 1 + flatness) + 1
        if form.M // (q + 1) < bound:
            message = f"floor(M / (q+1)) = {form.M // (q + 1)} < n (q+1+N) + 1 = {bound}"
            if all(v.is_zero() for v in form.V):
                logger.warning(f"{message}; vestigial part is zero, continuing")
            elif strict:
                raise HypothesisViolated(message)
            else:
                logger.warning(f"{message}; continuing without the smoothness guarantee")

        top = max(q - 1, 0)
        d = as_polynomial(form.D, top)
        r = rotation.matrix(top)
        c = PolyMatrix.constant(form.C.at_zero(), top)
        if not (_commutes(r, d) and _commutes(r, c)):
            raise ShapeError("Rotational matrix does not commute with the exponential and residual parts")

        difference = d - r if q > 0 else PolyMatrix.zero(n, 0)
        principal = as_polynomial(difference, q) + PolyMatrix.constant(form.C.at_zero(), q).shift(q).truncate(q)
        s = principal.order()
        if s is None:
            raise HypothesisViolated("D - R + x^q C vanishes")
        reduced = difference.exact_divide(s) if s <= q - 1 else PolyMatrix.zero(n, 0)
        if not no_dominant_rotation(reduced, form.bs):
            raise HypothesisViolated("Reduced exponential part still has dominant rotation")

        straightener = StraightenerEval(R=rotation.negate(), q_param=top)
        result = StraightenedField(form=form, straightener=straightener, s=s, reduced_D=reduced, N=flatness)
        logger.info(f"Straightened {len(rotation.pairs)} rotation planes; reduced type {result.reduced_type}")
        return result
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Straightening failed: {str(e)}")
        raise
