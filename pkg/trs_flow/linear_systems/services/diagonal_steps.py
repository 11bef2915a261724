"""
Elementary diagonal steps.
A diagonal monomial gauge diag(x^k_1, ..., x^k_n) is the product of steps
that multiply one coordinate subset by x; admissibility is checked step by step.
"""

import logging
from typing import Sequence

from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.models.truncated_series import TruncatedSeries
from ...shared.errors import EmptyPrecision, Inadmissible, InsufficientPrecision, NotDivisible
from ..models.linear_system import LinearSystem

logger = logging.getLogger(__name__)


def diagonal_steps(exponents: Sequence[int]) -> list[tuple[int, ...]]:
    """
    Decompose exponents into 0/1 steps.

    Step t multiplies the coordinates with k_i >= t by x, so applying the
    steps in order reproduces diag(x^k_i).
    """
    top = max(exponents, default=0)
    return [tuple(1 if k >= t else 0 for k in exponents) for t in range(1, top + 1)]


def shift_entry(entry: TruncatedSeries, d: int) -> TruncatedSeries:
    """Multiply by x^d, dividing exactly when d < 0."""
    if d >= 0:
        return entry.shift(d)
    try:
        return entry.exact_divide(-d)
    except NotDivisible as e:
        raise Inadmissible(f"Diagonal gauge introduces a pole: {e}") from e
    except EmptyPrecision as e:
        raise InsufficientPrecision(str(e)) from e


def apply_diagonal(system: LinearSystem, exponents: Sequence[int]) -> LinearSystem:
    """
    Apply y = diag(x^k) z in one shot.

    Entry (i, j) becomes x^(k_j - k_i) A_ij and the diagonal loses k_i x^p.

    Raises:
        Inadmissible: a negative power survives, or the system is regular
        InsufficientPrecision: divisibility cannot be decided at the known order
    """
    if system.p < 0:
        raise Inadmissible("Diagonal monomial gauge on a regular system introduces a pole")
    n = system.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = shift_entry(system.A.entry(i, j), exponents[j] - exponents[i])
            if i == j and exponents[i]:
                entry = entry - TruncatedSeries.monomial(system.p, exponents[i], max(entry.trunc, system.p))
            row.append(entry)
        rows.append(row)
    return LinearSystem.from_matrix(system.p, PolyMatrix.from_rows(rows))


def walk_diagonal_steps(system: LinearSystem, exponents: Sequence[int]) -> LinearSystem:
    """Apply every elementary step in turn; raises on the first inadmissible one."""
    current = system
    for t, step in enumerate(diagonal_steps(exponents), start=1):
        for i in range(system.n):
            if not step[i]:
                continue
            for j in range(system.n):
                if step[j]:
                    continue
                entry = current.A.entry(i, j)
                if current.p >= 0 and entry.coeffs[0] != 0:
                    raise Inadmissible(f"Step {t}: x does not divide A[{i}][{j}]")
        current = apply_diagonal(current, step)
        logger.debug(f"Diagonal step {t} applied, rank now {current.p}")
    return current
