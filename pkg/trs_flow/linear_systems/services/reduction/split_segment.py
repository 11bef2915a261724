"""
Segment splitting.
Separates the eigenclasses of a segment's first non-scalar coefficient and
turns segments with a complex-conjugate pair into Theta blocks.
"""

import logging
import math
from fractions import Fraction
from typing import Optional

from ....series_core.models.poly_matrix import ConstMatrix
from ....series_core.services.linear_algebra import (
    charpoly_factors,
    columns_to_matrix,
    identity,
    invert,
    matmul,
    matrix_power,
    nullspace,
    polynomial_at_matrix,
    rank,
    subtract,
)
from ....shared.errors import Undecidable
from .split_series import block_projection, split_series, theta_projection
from .state import ReductionState, Segment, block_coefficient

logger = logging.getLogger(__name__)


def _leading_index(basis: list[list[Fraction]]) -> int:
    return min(next(i for i, c in enumerate(v) if c != 0) for v in basis)


def _local_coefficients(state: ReductionState, segment: Segment, level: int) -> list[ConstMatrix]:
    return [block_coefficient(state.system, segment, k) for k in range(level, state.system.trunc + 1)]


def split_eigenclasses(state: ReductionState, segment: Segment, level: int, factors: list[tuple[list[Fraction], int]]) -> None:
    """
    Block-diagonalize a segment whose level coefficient has several eigenclasses.

    A constant similarity sorts the generalized eigenspaces, then a splitting
    series removes the coupling at every higher order.
    """
    n_level = block_coefficient(state.system, segment, level)
    classes = []
    for coeffs, mult in factors:
        basis = nullspace(matrix_power(polynomial_at_matrix(coeffs, n_level), mult))
        classes.append(basis)
    classes.sort(key=_leading_index)
    t = columns_to_matrix([v for basis in classes for v in basis])
    state.apply_similarity(segment, t)

    sizes = [len(basis) for basis in classes]
    local = _local_coefficients(state, segment, level)
    p = split_series(local, state.system.p - level, block_projection(sizes))
    state.apply_series(segment, p)

    parts, start = [], segment.start
    for s in sizes:
        parts.append(Segment(start=start, stop=start + s))
        start += s
    state.replace(segment, parts)
    logger.info(f"Split coordinates {segment.start}..{segment.stop - 1} into sizes {sizes} at level {level}")


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def pair_complex(state: ReductionState, segment: Segment, level: int, factor: list[Fraction], mult: int) -> None:
    """
    Bring a segment with a single irreducible quadratic eigenclass to Theta(mu I).

    Raises:
        Undecidable: Irrational imaginary part, real irrational roots, or a
            non-semisimple complex eigenvalue
    """
    _, c1, c0 = factor
    a = -c1 / 2
    if c0 - a * a <= 0:
        raise Undecidable(f"Irrational real eigenvalues (factor lam^2 + {c1} lam + {c0}) at level {level}")
    b = _rational_sqrt(c0 - a * a)
    if b is None:
        raise Undecidable(f"Imaginary part sqrt({c0 - a * a}) is irrational at level {level}")

    n_level = block_coefficient(state.system, segment, level)
    s = segment.size
    shifted = subtract(n_level, [[a if i == j else Fraction(0) for j in range(s)] for i in range(s)])
    square = matmul(shifted, shifted)
    if square != [[-b * b if i == j else Fraction(0) for j in range(s)] for i in range(s)]:
        raise Undecidable(f"Complex eigenvalue {a}+{b}i is not semisimple at level {level}")

    columns: list[list[Fraction]] = []
    for e in identity(s):
        trial = columns + [e]
        if rank(columns_to_matrix(trial)) == len(trial):
            w = [sum((shifted[i][k] * e[k] for k in range(s)), Fraction(0)) / b for i in range(s)]
            columns.extend([e, w])
        if len(columns) == s:
            break
    t = columns_to_matrix(columns)
    if invert(t) is None:
        raise Undecidable("Could not build a Theta basis for the complex eigenclass")
    state.apply_similarity(segment, t)

    local = _local_coefficients(state, segment, level)
    p = split_series(local, state.system.p - level, theta_projection)
    state.apply_series(segment, p)
    state.replace(segment, [Segment(start=segment.start, stop=segment.stop, complex_block=True)])
    logger.info(f"Coordinates {segment.start}..{segment.stop - 1} form a complex block {a}+{b}i (x{mult}) at level {level}")
