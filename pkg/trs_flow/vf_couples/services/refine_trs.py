"""
TRS refinement service.
Raises a TRS couple of type (q, 0, 0) to type (q, N, M).
"""

import logging
import math
from typing import Optional

import sympy

from ...linear_systems.models.linear_system import LinearSystem
from ...linear_systems.services.compute_spectrum import spectral_values
from ...linear_systems.services.kill_vestigial import kill_vestigial
from ...linear_systems.services.recognize_trs import recognize_trs
from ...series_core.models.poly_matrix import PolyMatrix
from ...settings import get_settings
from ...shared.errors import Inadmissible, Obstruction, TrsFlowError, Undecidable
from ..models.coord_transform import CoordTransform, DiagMonomialCT, PolyRegularCT
from ..models.invariant_couple import InvariantCouple
from ..models.results import VFReduction
from ..models.transform_chain import TransformChain
from ..models.vector_field_jet import VectorFieldJet
from .apply_coord_transform import apply_coord_transform
from .associated_linear_system import jacobian_along
from .normalize_x_component import curve_translation
from .recognize_trs_vf import recognize_trs_vf, split_unit

logger = logging.getLogger(__name__)


def _spectral_floor(c: PolyMatrix, cluster_tol: float) -> int:
    """floor of the largest real part of an eigenvalue of C."""
    floors = []
    for value in spectral_values(c):
        if value.exact is not None:
            floors.append(int(sympy.floor(sympy.re(value.exact))))
            continue
        real = value.approx.real
        if abs(real - round(real)) < cluster_tol:
            raise Undecidable(f"Real part {real:.6g} is within {cluster_tol:g} of an integer")
        floors.append(math.floor(real))
    return max(floors)


def refine_trs(couple: InvariantCouple, N: int, M: int, cluster_tol: Optional[float] = None) -> VFReduction:
    """
    Push the vestigial part to x^(q+1+N) V(x, x^M y).

    The curve is translated by a jet of order l' and the origin blown up l
    times; a regular gauge killing the vestigial part of the linear system
    through order N + M is then lifted, followed by M blow-ups. l is large
    enough that every eigenvalue of the final residual part has negative real
    part.

    Args:
        couple: Couple in TRS form of type (q, 0, 0)
        N: Extra flatness of the vestigial part
        M: Weight of y inside the vestigial part
        cluster_tol: Tolerance for float eigenvalues

    Returns:
        The refined couple, the refinement chain and its TRS form

    Raises:
        Inadmissible: Couple is not in TRS form
        InsufficientPrecision: The jet does not reach order N + M
        Obstruction: The vestigial part could not be pushed to the requested order
        Undecidable: The spectral bound is too close to an integer to decide
    """
    tol = cluster_tol if cluster_tol is not None else get_settings().cluster_tol
    if N < 0 or M < 0:
        raise ValueError("N and M must be non-negative")
    try:
        start = recognize_trs_vf(couple)
        split = split_unit(couple)
        if start is None or split is None:
            raise Inadmissible("Couple is not in TRS form")
        q, n = start.q, couple.n

        eta = VectorFieldJet.make(couple.vf.xi_x, split.eta_y)
        system = LinearSystem(n=n, p=q, A=jacobian_along(eta, couple.curve))
        linear_form = recognize_trs(system)
        if linear_form is None or linear_form.permutation != tuple(range(n)):
            raise Inadmissible("Linear part along the curve is not a TRS form in these coordinates")
        gauge, _ = kill_vestigial(linear_form, N + M)

        m = q + 1 + N + M
        ell = max(1, m - q, _spectral_floor(start.C, tol) - M + 1)
        ell_jet = max(ell + m, ell + M + 1)
        steps: list[CoordTransform] = curve_translation(couple, min(ell_jet, couple.curve.trunc))
        steps += [DiagMonomialCT(k=n) for _ in range(ell)]
        if gauge.P != PolyMatrix.identity(n, gauge.P.trunc):
            steps.append(PolyRegularCT(P=gauge.P))
        steps += [DiagMonomialCT(k=n) for _ in range(M)]
        logger.info(f"Refining to type ({q}, {N}, {M}) with l = {ell}, l' = {ell_jet}")

        result = couple
        for step in steps:
            result = apply_coord_transform(result, step)
        form = recognize_trs_vf(result, N, M)
        if form is None:
            raise Obstruction(q + 1 + N, f"refined couple is not of type ({q}, {N}, {M})")
        return VFReduction(couple=result, chain=TransformChain(steps=steps), form=form)
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Refinement failed: {str(e)}")
        raise
