"""
Kill vestigial service.
Pushes the vestigial part of a TRS form to O(x^N) with a polynomial gauge
that keeps the principal part D + x^q C.
"""

import logging
from fractions import Fraction
from typing import Optional

from ...series_core.models.poly_matrix import ConstMatrix, PolyMatrix
from ...series_core.services.linear_algebra import identity, solve
from ...shared.errors import InsufficientPrecision, Obstruction
from ..models.gauge_transform import PolyRegular
from ..models.trs_linear_form import TRSLinearForm
from .apply_gauge import apply_gauge
from .has_good_spectrum import has_good_spectrum

logger = logging.getLogger(__name__)


def _homological_rows(
    principal: list[ConstMatrix], vestigial: list[ConstMatrix], q: int, n: int, top: int
) -> tuple[list[list[Fraction]], list[Fraction]]:
    """
    Linear equations in P_1..P_L for orders 1..top.

    Order m reads sum_i [A_i, P_(m-i)] + V_j P_0..P_j - (m-q) P_(m-q) = 0 with
    j = m - q - 1; the V_j P_0 term moves to the right-hand side.
    """
    size = n * n
    width = (q + len(vestigial)) * size

    def col(t: int, r: int, s: int) -> int:
        return (t - 1) * size + r * n + s

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for m in range(1, top + 1):
        block = [[Fraction(0)] * width for _ in range(size)]
        b = [Fraction(0)] * size
        for i in range(0, min(q, m - 1) + 1):
            a_i, t = principal[i], m - i
            for r in range(n):
                for s in range(n):
                    eq = block[r * n + s]
                    for u in range(n):
                        eq[col(t, u, s)] += a_i[r][u]
                        eq[col(t, r, u)] -= a_i[u][s]
        if m >= q + 1:
            j = m - q - 1
            for bb in range(1, j + 1):
                v = vestigial[j - bb]
                for r in range(n):
                    for s in range(n):
                        for u in range(n):
                            block[r * n + s][col(bb, u, s)] += v[r][u]
            for r in range(n):
                for s in range(n):
                    block[r * n + s][col(m - q, r, s)] -= m - q
                    b[r * n + s] = -vestigial[j][r][s]
        rows.extend(block)
        rhs.extend(b)
    return rows, rhs


def kill_vestigial(form: TRSLinearForm, order: int) -> tuple[PolyRegular, TRSLinearForm]:
    """
    Find P = I + P_1 x + ... with the transformed vestigial part O(x^order).

    All orders 1..q+order of the homological equation are solved as one
    linear system over Q; D and C are left untouched.

    Args:
        form: TRS form whose residual part should have good spectrum
        order: Target order N of the vestigial part

    Returns:
        The gauge and the transformed form

    Raises:
        InsufficientPrecision: V is not known through x^(order-1)
        Obstruction: The homological equation fails at some order
    """
    q, n = form.q, form.n
    current = form.V.order()
    if order > 0 and (current is None or current < order) and form.V.trunc < order - 1:
        raise InsufficientPrecision(f"Vestigial part known through x^{form.V.trunc}, need x^{order - 1}")
    if order <= 0 or current is None or current >= order:
        return PolyRegular(P=PolyMatrix.identity(n, 0)), form
    if not has_good_spectrum(form.C):
        logger.warning("Residual part lacks good spectrum; the homological equation may be obstructed")

    principal = [form.D.coefficient(i) for i in range(q)] + [form.C.at_zero()]
    vestigial = [form.V.coefficient(a) for a in range(order)]
    top = q + order
    rows, rhs = _homological_rows(principal, vestigial, q, n, top)
    solution = solve(rows, rhs)
    if solution is None:
        raise Obstruction(_first_obstruction(rows, rhs, n, top))

    size = n * n
    coefficients: list[ConstMatrix] = [identity(n)]
    for t in range(1, top + 1):
        chunk = solution[(t - 1) * size: t * size]
        coefficients.append([chunk[r * n: (r + 1) * n] for r in range(n)])
    system = form.to_system()
    gauge = PolyRegular(P=PolyMatrix.from_const_sequence(coefficients, system.trunc + 1))
    transformed = apply_gauge(system, gauge)

    a = transformed.A
    if transformed.p != q:
        raise InsufficientPrecision(f"Gauge changed the Poincare rank from {q} to {transformed.p}")
    for k in range(q + 1):
        expected = form.D.coefficient(k) if k < q else form.C.at_zero()
        if a.coefficient(k) != expected:
            raise InsufficientPrecision(f"Principal part changed at x^{k}; truncation too short")
    v = PolyMatrix.from_coefficients([[e.coeffs[q + 1:] for e in row] for row in a.entries], a.trunc - q - 1)
    reached: Optional[int] = v.order()
    if reached is not None and reached < order:
        raise Obstruction(q + 1 + reached, f"vestigial part still has order {reached} < {order}")
    logger.info(f"Vestigial part pushed to O(x^{order}) with a gauge of degree {top}")
    return gauge, TRSLinearForm(q=q, bs=form.bs, D=form.D, C=form.C, V=v, permutation=form.permutation)


def _first_obstruction(rows: list[list[Fraction]], rhs: list[Fraction], n: int, top: int) -> int:
    size = n * n
    for m in range(1, top + 1):
        if solve(rows[: m * size], rhs[: m * size]) is None:
            return m
    return top
