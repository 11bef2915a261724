"""
Nilpotent reduction.
Lowers the rank of a segment whose first non-scalar coefficient has a single
rational eigenvalue, by diagonal monomial shears and, when the Newton slope
is fractional, a ramification.
"""

import itertools
import logging
from fractions import Fraction
from sympy.combinatorics import Permutation

from ....series_core.models.truncated_series import TruncatedSeries
from ....series_core.services.linear_algebra import charpoly_factors, from_sympy, rank, to_sympy
from ....shared.errors import FuelExhausted, InsufficientPrecision, TrsFlowError
from ...models.gauge_transform import DiagMonomial, Ramification
from ...models.linear_system import LinearSystem
from ..apply_gauge import apply_gauge
from ..is_admissible import is_admissible
from .state import ReductionState, Segment, block_coefficient, segment_level

logger = logging.getLogger(__name__)

Measure = tuple[int, int, int]


def moser_measure(system: LinearSystem, segment: Segment) -> Measure:
    """
    (local rank, splittable flag, nilpotent rank) of a segment; smaller is better.

    A segment with several eigenclasses at its level scores 0 in the middle
    slot since it splits next.
    """
    level = segment_level(system, segment)
    if level >= system.p:
        return (-1, 0, 0)
    m = block_coefficient(system, segment, level)
    factors = charpoly_factors(m)
    if len(factors) > 1:
        return (system.p - level, 0, 0)
    coeffs, _ = factors[0]
    if len(coeffs) != 2:
        return (system.p - level, 0, 0)
    mu = -coeffs[1]
    return (system.p - level, 1, rank([[c - (mu if i == j else 0) for j, c in enumerate(row)] for i, row in enumerate(m)]))


def jordan_similarity(state: ReductionState, segment: Segment, level: int) -> None:
    m = block_coefficient(state.system, segment, level)
    p, j = to_sympy(m).jordan_form()
    if from_sympy(j) != m:
        state.apply_similarity(segment, from_sympy(p))


def _shear_candidates(segment: Segment, n: int) -> list[tuple[int, ...]]:
    s = segment.size
    local = [k for k in itertools.product(range(s + 1), repeat=s) if min(k) == 0 and max(k) > 0]
    local.sort(key=lambda k: (max(k), sum(k), k))
    out = []
    for k in local:
        full = [0] * n
        for a, i in enumerate(segment.indices):
            full[i] = k[a]
        out.append(tuple(full))
    return out


def try_shear(state: ReductionState, segment: Segment) -> bool:
    """Apply the first admissible shear that lowers the segment's measure."""
    system = state.system
    before = moser_measure(system, segment)
    for exponents in _shear_candidates(segment, system.n):
        gauge = DiagMonomial(exponents=exponents)
        try:
            if not is_admissible(system, gauge):
                continue
            after = moser_measure(apply_gauge(system, gauge), segment)
        except TrsFlowError as e:
            logger.debug(f"Shear {exponents} skipped: {e}")
            continue
        if after < before:
            state.apply(gauge)
            state.reductions += 1
            logger.debug(f"Shear {exponents} lowered the measure {before} -> {after}")
            return True
    return False


def _determinant(rows: list[list[TruncatedSeries]]) -> TruncatedSeries:
    size = len(rows)
    total = TruncatedSeries.zero(rows[0][0].trunc)
    for perm in itertools.permutations(range(size)):
        term = rows[0][perm[0]]
        for i in range(1, size):
            term = term * rows[i][perm[i]]
        total = total + term if Permutation(list(perm)).signature() > 0 else total - term
    return total


def newton_slope(state: ReductionState, segment: Segment, level: int) -> Fraction:
    """
    Smallest slope min_i ord(a_i) / i of the characteristic polynomial of
    N(x) - mu I, where N is the segment block divided by x^level.
    """
    system = state.system
    m = block_coefficient(system, segment, level)
    mu = m[0][0]
    rows = [[_above(system.A.entry(i, j), level) - (mu if i == j else 0) for j in segment.indices] for i in segment.indices]
    slopes = []
    for i in range(1, segment.size + 1):
        minors = [_determinant([[rows[r][c] for c in subset] for r in subset]) for subset in itertools.combinations(range(segment.size), i)]
        coefficient = minors[0]
        for minor in minors[1:]:
            coefficient = coefficient + minor
        v = coefficient.order()
        if v is not None:
            slopes.append(Fraction(v, i))
    if not slopes:
        raise InsufficientPrecision("Nilpotent remainder vanishes to known precision; raise the working order")
    return min(slopes)


def reduce_nilpotent(state: ReductionState, segment: Segment, level: int, max_ramifications: int) -> None:
    """
    One step of rank reduction on a single-eigenvalue segment.

    Raises:
        FuelExhausted: Ramification allowance spent or no shear found at an
            integral slope
    """
    jordan_similarity(state, segment, level)
    if try_shear(state, segment):
        return
    slope = newton_slope(state, segment, segment_level(state.system, segment))
    if slope.denominator == 1:
        raise FuelExhausted(f"No rank-reducing shear found at integral slope {slope}")
    if state.ramifications >= max_ramifications:
        raise FuelExhausted(f"Ramification allowance {max_ramifications} exhausted")
    state.apply(Ramification(r=slope.denominator))
    state.ramifications += 1
    logger.info(f"Fractional slope {slope}; ramified by {slope.denominator}")


def _above(entry: TruncatedSeries, level: int) -> TruncatedSeries:
    """Drop the scalar prefix below x^level and divide by x^level."""
    return TruncatedSeries.make([0] * level + list(entry.coeffs[level:]), entry.trunc).exact_divide(level)
