"""
Vector field TRS reduction service.
Drives a couple (xi, Gamma) to TRS form of type (q, 0, 0).
"""

import logging
from typing import Optional

from ...linear_systems.models.linear_system import LinearSystem
from ...linear_systems.models.reduction_result import ReductionResult
from ...linear_systems.services.has_good_spectrum import has_good_spectrum
from ...linear_systems.services.reduce_linear_full import reduce_linear_full
from ...settings import get_settings
from ...shared.errors import EmptyPrecision, InsufficientPrecision, TrsFlowError, Undecidable
from ..models.coord_transform import CoordTransform, DiagMonomialCT, PolyRegularCT
from ..models.invariant_couple import InvariantCouple
from ..models.results import NormalizedCouple, VFReduction
from ..models.transform_chain import TransformChain
from ..models.trs_vf_form import TRSVFForm
from .apply_coord_transform import apply_coord_transform
from .associated_linear_system import jacobian_along
from .lift_gauge_chain import lift_gauge_chain
from .normalize_x_component import curve_translation, factor_field, normalize_x_component
from .recognize_trs_vf import recognize_trs_vf

logger = logging.getLogger(__name__)


def _replay(couple: InvariantCouple, steps: list[CoordTransform]) -> InvariantCouple:
    """Apply steps in order; a blow-up that runs out of jet names the degree still needed."""
    for index, step in enumerate(steps):
        try:
            couple = apply_coord_transform(couple, step)
        except EmptyPrecision as e:
            needed = couple.vf.trunc + len(steps) - index
            raise InsufficientPrecision(
                f"Field jet of degree {couple.vf.trunc} ran out at step {index + 1} of {len(steps)} ({step.kind}); "
                f"at least degree {needed} is needed: {e}"
            ) from e
    return couple


def _good_form(couple: InvariantCouple, cluster_tol: Optional[float]) -> Optional[TRSVFForm]:
    try:
        form = recognize_trs_vf(couple)
    except InsufficientPrecision:
        return None
    if form is None or not has_good_spectrum(form.C, cluster_tol):
        return None
    return form


def _blow_up_flat(current: NormalizedCouple) -> NormalizedCouple:
    """Straighten the curve completely, blow up the origin once and refactor."""
    couple = current.couple
    steps = curve_translation(couple, couple.curve.trunc) + [DiagMonomialCT(k=couple.n)]
    return factor_field(_replay(couple, steps), current.m, current.chain.extend(steps))


def reduce_vf_trs(
    couple: InvariantCouple,
    working_order: Optional[int] = None,
    fuel: Optional[int] = None,
    cluster_tol: Optional[float] = None,
) -> VFReduction:
    """
    Find admissible transformations taking (xi, Gamma) to TRS form (q, 0, 0).

    After normalization, a field transverse to x = 0 needs one more blow-up.
    Otherwise the linear system along Gamma is reduced, its gauge chain is
    lifted to (x, y). A nonempty lifted chain is preceded by a translation by
    a jet of Gamma and enough blow-ups for the lifted chain to act on the
    field as it acts on its linear part.

    Args:
        couple: Invariant couple with xi(0) = 0
        working_order: Cap on the truncation of the field jet
        fuel: Allowance for linear reduction and for extra blow-ups
        cluster_tol: Separation tolerance for float eigenvalues

    Returns:
        The couple in TRS coordinates, the full chain and the recognized form

    Raises:
        InvarianceViolated: Gamma is not invariant
        DegenerateCurve: xi vanishes along Gamma
        InsufficientPrecision: The jet ran out before a form was recognized
        Undecidable: The reduced couple was not recognized
    """
    settings = get_settings()
    allowance = fuel if fuel is not None else settings.fuel
    if working_order is not None and couple.vf.trunc > working_order:
        couple = InvariantCouple(vf=couple.vf.truncate(working_order), curve=couple.curve)

    try:
        form = _good_form(couple, cluster_tol)
        if form is not None:
            logger.info(f"Couple already in TRS form of rank {form.q}")
            return VFReduction(couple=couple, chain=TransformChain(), form=form)

        current = normalize_x_component(couple)
        linear: Optional[ReductionResult] = None
        for _ in range(allowance):
            if current.p < 0:
                break
            jacobian = jacobian_along(current.eta, current.couple.curve)
            if all(c == 0 for row in jacobian.at_zero() for c in row):
                current = _blow_up_flat(current)
                continue
            system = LinearSystem(n=couple.n, p=current.p, A=jacobian)
            linear = reduce_linear_full(system, working_order=working_order, fuel=allowance, cluster_tol=cluster_tol)
            lifted = lift_gauge_chain(linear.chain)
            if linear.form is not None and linear.form.permutation != tuple(range(couple.n)):
                lifted.append(PolyRegularCT.permutation(list(linear.form.permutation)))
            steps: list[CoordTransform] = []
            if lifted:
                h = TransformChain(steps=lifted).determinacy(max(linear.system.p, 0) + 1)
                steps = curve_translation(current.couple, min(2 * h, current.couple.curve.trunc))
                steps += [DiagMonomialCT(k=couple.n) for _ in range(h)]
                steps += lifted
                logger.info(f"Lifting {len(lifted)} transformations after {h} preparatory blow-ups")
            chain = current.chain.extend(steps)
            result = _replay(current.couple, steps)
            break
        else:
            raise Undecidable(f"Linear part along the curve stayed degenerate after {allowance} blow-ups")

        if current.p < 0:
            steps = [DiagMonomialCT(k=couple.n)]
            chain = current.chain.extend(steps)
            result = _replay(current.couple, steps)

        for _ in range(allowance):
            form = recognize_trs_vf(result)
            if form is not None and has_good_spectrum(form.C, cluster_tol):
                logger.info(f"Reached TRS field of rank {form.q} after {len(chain)} transformations")
                return VFReduction(couple=result, chain=chain, form=form, linear=linear)
            steps = curve_translation(result, result.curve.trunc) + [DiagMonomialCT(k=couple.n)]
            chain = chain.extend(steps)
            result = _replay(result, steps)
        raise Undecidable("Transformed couple was not recognized as a TRS form")
    except EmptyPrecision as e:
        raise InsufficientPrecision(
            f"Field jet of degree {couple.vf.trunc} ran out during reduction; rerun with working order above it: {e}"
        ) from e
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Vector field reduction failed: {str(e)}")
        raise
