"""
Recognize TRS service.
Reads a singular linear system as a TRS form of its own Poincare rank,
up to a permutation of coordinates.
"""

import logging
from fractions import Fraction
from typing import Optional

from ...series_core.models.block_structure import Block, BlockKind, BlockStructure
from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.models.truncated_series import TruncatedSeries
from ...series_core.services.compatible import compatible
from ...shared.errors import InsufficientPrecision
from ..models.linear_system import LinearSystem
from ..models.trs_linear_form import TRSLinearForm

logger = logging.getLogger(__name__)

GroupKey = tuple[str, tuple[Fraction, ...], tuple[Fraction, ...]]


def _low(entry: TruncatedSeries, q: int) -> tuple[Fraction, ...]:
    return tuple(entry.coeffs[:q])


def _pair_coordinates(low: list[list[tuple[Fraction, ...]]], n: int) -> Optional[list[tuple[int, ...]]]:
    """
    Split coordinates into singletons and Theta pairs by the off-diagonal
    pattern of the exponential part; None if the pattern is not block-diagonal.
    """
    zero = tuple(Fraction(0) for _ in low[0][0]) if n else ()
    partners = [{j for j in range(n) if j != i and (low[i][j] != zero or low[j][i] != zero)} for i in range(n)]
    units: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for i in range(n):
        if i in seen:
            continue
        if not partners[i]:
            units.append((i,))
            seen.add(i)
            continue
        if len(partners[i]) != 1:
            return None
        (j,) = partners[i]
        if partners[j] != {i}:
            return None
        if low[i][i] != low[j][j] or low[i][j] != tuple(-c for c in low[j][i]):
            return None
        # orient so the imaginary part starts positive; conjugate pairs then share a key
        b = low[j][i]
        leading = next(c for c in b if c != 0)
        units.append((i, j) if leading > 0 else (j, i))
        seen.update((i, j))
    return units


def _unit_key(low: list[list[tuple[Fraction, ...]]], unit: tuple[int, ...]) -> GroupKey:
    if len(unit) == 1:
        i = unit[0]
        return ("real", low[i][i], ())
    i, j = unit
    return ("complex", low[i][i], low[j][i])


def recognize_trs(system: LinearSystem) -> Optional[TRSLinearForm]:
    """
    Recognize the system as x^(q+1) y' = (D + x^q C + x^(q+1) V) y with q = p.

    Coordinates whose exponential parts are coupled by a Theta(c) pattern are
    paired; equal eigen-polynomials are grouped in order of first appearance.

    Args:
        system: Singular system (p >= 0)

    Returns:
        The form in permuted coordinates, or None when no block pattern fits

    Raises:
        ValueError: The system is regular
        InsufficientPrecision: Truncation does not reach x^(q+1)
    """
    q = system.p
    if q < 0:
        raise ValueError("Only singular systems have a TRS form")
    if system.trunc < q + 1:
        raise InsufficientPrecision(f"Truncation {system.trunc} does not reach the vestigial part at x^{q + 1}")
    n = system.n
    low = [[_low(system.A.entry(i, j), q) for j in range(n)] for i in range(n)]
    units = _pair_coordinates(low, n)
    if units is None:
        logger.debug("Exponential part is not block-diagonal in any pairing")
        return None

    groups: dict[GroupKey, list[tuple[int, ...]]] = {}
    for unit in units:
        groups.setdefault(_unit_key(low, unit), []).append(unit)

    permutation: list[int] = []
    blocks: list[Block] = []
    for (kind, _, _), members in groups.items():
        for unit in members:
            permutation.extend(unit)
        blocks.append(Block(kind=BlockKind.COMPLEX if kind == "complex" else BlockKind.REAL, size=len(members)))

    a = PolyMatrix.from_rows([[system.A.entry(r, s) for s in permutation] for r in permutation])
    d_trunc = max(q - 1, 0)
    d = PolyMatrix.from_coefficients([[e.coeffs[:q] for e in row] for row in a.entries], d_trunc)
    c = PolyMatrix.constant(a.coefficient(q), d_trunc)
    v = PolyMatrix.from_coefficients([[e.coeffs[q + 1:] for e in row] for row in a.entries], system.trunc - q - 1)
    bs = BlockStructure(blocks=tuple(blocks))

    if not compatible(c, d, bs):
        logger.debug(f"Residual part does not follow block structure {bs}")
        return None
    form = TRSLinearForm(q=q, bs=bs, D=d, C=c, V=v, permutation=tuple(permutation))
    logger.info(f"Recognized TRS form of rank {q} with blocks {bs}")
    return form
