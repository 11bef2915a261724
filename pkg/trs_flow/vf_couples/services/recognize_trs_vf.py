"""
Recognize TRS vector field service.
Reads a couple as x^e u [x^(q+1) d/dx + ((D + x^q C) y + x^(q+1+N) V(x, x^M y)) . d/dy].
"""

import logging
from fractions import Fraction
from typing import NamedTuple, Optional

from ...series_core.models.multi_series import MultiSeries
from ...series_core.models.poly_matrix import PolyMatrix
from ...linear_systems.models.linear_system import LinearSystem
from ...linear_systems.services.recognize_trs import recognize_trs
from ...shared.errors import EmptyPrecision, InsufficientPrecision, NotDivisible
from ..models.invariant_couple import InvariantCouple
from ..models.trs_vf_form import TRSVFForm

logger = logging.getLogger(__name__)


class UnitSplit(NamedTuple):
    """xi = x^e u (x^(q+1) d/dx + eta_y . d/dy)."""

    e: int
    q: int
    unit: MultiSeries
    eta_y: list[MultiSeries]


def split_unit(couple: InvariantCouple) -> Optional[UnitSplit]:
    """Factor the largest x^e u out of the field, or None if xi_x is not x^k times a unit."""
    vf = couple.vf
    k = vf.xi_x.x_order()
    if k is None:
        return None
    try:
        unit = vf.xi_x.exact_divide(k)
    except EmptyPrecision as e:
        raise InsufficientPrecision(f"Field jet too short to factor x^{k}: {e}") from e
    if not unit.is_unit():
        return None
    scaled = [c * unit.reciprocal() for c in vf.xi_y]
    orders = [v for c in scaled if (v := c.x_order()) is not None]
    if not orders:
        return None
    e = min(orders + [k - 1])
    if e < 0:
        return None
    return UnitSplit(e=e, q=k - e - 1, unit=unit, eta_y=[c.exact_divide(e) for c in scaled])


def _weighted(w: MultiSeries, m: int) -> Optional[MultiSeries]:
    """V with W(x, y) = V(x, x^M y), or None if W has a term x^a y^b with a < M|b|."""
    if m == 0:
        return w
    trunc = w.trunc // (m + 1)
    terms: dict[tuple[int, ...], Fraction] = {}
    for alpha, c in w.terms.items():
        weight = m * sum(alpha[1:])
        if alpha[0] < weight:
            return None
        key = (alpha[0] - weight,) + alpha[1:]
        if sum(key) <= trunc:
            terms[key] = c
    return MultiSeries.make(w.n, trunc, terms)


def recognize_trs_vf(couple: InvariantCouple, N: int = 0, M: int = 0) -> Optional[TRSVFForm]:
    """
    Recognize a TRS form of type (q, N, M) in the current coordinates.

    The linear part at y = 0 must be a TRS linear form without reordering
    of coordinates; the rest must be x^(q+1+N) V(x, x^M y).

    Args:
        couple: Couple to read
        N: Extra flatness required of the vestigial part
        M: Weight of y inside the vestigial part

    Returns:
        The form, or None when the couple does not have that shape

    Raises:
        InsufficientPrecision: The jet does not reach the vestigial part
    """
    split = split_unit(couple)
    if split is None:
        logger.debug("Field is not x^k times a unit in its x-component")
        return None
    n, q = couple.n, split.q
    try:
        linear = PolyMatrix.from_rows([c.linear_part() for c in split.eta_y])
    except EmptyPrecision as e:
        raise InsufficientPrecision(f"Field jet too short for its linear part: {e}") from e
    try:
        system = LinearSystem(n=n, p=q, A=linear)
    except ValueError:
        logger.debug("Linear part vanishes at x = 0")
        return None
    form = recognize_trs(system)
    if form is None or form.permutation != tuple(range(n)):
        logger.debug("Linear part is not a TRS form in the given coordinate order")
        return None

    k = split.eta_y[0].trunc
    principal = form.principal(k)
    ys = [MultiSeries.variable(j + 1, n, k) for j in range(n)]
    vestigial = []
    for i, comp in enumerate(split.eta_y):
        rest = comp
        for j in range(n):
            rest = rest - MultiSeries.from_x_series(principal.entry(i, j), n) * ys[j]
        try:
            w = rest.exact_divide(q + 1 + N)
        except NotDivisible:
            logger.debug(f"Component {i} is not divisible by x^{q + 1 + N}")
            return None
        except EmptyPrecision as e:
            raise InsufficientPrecision(f"Field jet does not reach x^{q + 1 + N}: {e}") from e
        v = _weighted(w, M)
        if v is None:
            logger.debug(f"Component {i} is not of the form V(x, x^{M} y)")
            return None
        vestigial.append(v)

    result = TRSVFForm(
        e=split.e, q=q, N=N, M=M, bs=form.bs, D=form.D, C=form.C, V=tuple(vestigial), unit=split.unit
    )
    logger.info(f"Recognized TRS field of type ({q}, {N}, {M}) with e = {split.e}")
    return result
