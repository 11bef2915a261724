"""
Splitting series.
Order-by-order gauge P = I + P_1 x + ... that moves every coefficient of
x^(r+1) y' = N(x) y into a subalgebra containing N(0).
"""

import logging
from fractions import Fraction
from typing import Callable, Sequence

from ....series_core.models.poly_matrix import ConstMatrix
from ....series_core.services.linear_algebra import add, identity, matmul, scale, solve, subtract, zeros
from ....shared.errors import Obstruction

logger = logging.getLogger(__name__)

Projection = Callable[[ConstMatrix], ConstMatrix]


def block_projection(sizes: Sequence[int]) -> Projection:
    """Keep the diagonal blocks of the given sizes."""
    owner = [k for k, s in enumerate(sizes) for _ in range(s)]

    def keep(m: ConstMatrix) -> ConstMatrix:
        return [[c if owner[i] == owner[j] else Fraction(0) for j, c in enumerate(row)] for i, row in enumerate(m)]

    return keep


def theta_projection(m: ConstMatrix) -> ConstMatrix:
    """Keep the Theta(a + ib) part of every 2x2 sub-block."""
    out = zeros(len(m))
    for bi in range(0, len(m), 2):
        for bj in range(0, len(m), 2):
            a = (m[bi][bj] + m[bi + 1][bj + 1]) / 2
            b = (m[bi + 1][bj] - m[bi][bj + 1]) / 2
            out[bi][bj], out[bi][bj + 1], out[bi + 1][bj], out[bi + 1][bj + 1] = a, -b, b, a
    return out


def _equations(n0: ConstMatrix, keep: Projection) -> list[list[Fraction]]:
    """Rows for N0 X - X N0 followed by rows forcing keep(X) = 0."""
    s = len(n0)
    rows = []
    for r in range(s):
        for c in range(s):
            row = [Fraction(0)] * (s * s)
            for u in range(s):
                row[u * s + c] += n0[r][u]
                row[r * s + u] -= n0[u][c]
            rows.append(row)
    images = []
    for u in range(s):
        for v in range(s):
            unit = zeros(s)
            unit[u][v] = Fraction(1)
            images.append(keep(unit))
    for r in range(s):
        for c in range(s):
            rows.append([images[k][r][c] for k in range(s * s)])
    return rows


def split_series(coefficients: Sequence[ConstMatrix], local_rank: int, keep: Projection) -> list[ConstMatrix]:
    """
    Solve N P = P N' + x^(r+1) P' with every N'_k in keep's image.

    Args:
        coefficients: N_0, N_1, ... of the local system; N_0 must be kept
        local_rank: r >= 1
        keep: Linear projection onto a subalgebra stable under [N_0, .]

    Returns:
        P_0 = I, P_1, ... with the same length as coefficients

    Raises:
        Obstruction: The Sylvester equation is singular at some order
    """
    s = len(coefficients[0])
    n0 = coefficients[0]
    equations = _equations(n0, keep)
    p: list[ConstMatrix] = [identity(s)]
    kept: list[ConstMatrix] = [n0]
    for k in range(1, len(coefficients)):
        h = zeros(s)
        for i in range(1, k + 1):
            h = add(h, matmul(coefficients[i], p[k - i]))
        for i in range(1, k):
            h = subtract(h, matmul(p[i], kept[k - i]))
        if k > local_rank:
            h = subtract(h, scale(p[k - local_rank], Fraction(k - local_rank)))
        diagonal = keep(h)
        rest = subtract(h, diagonal)
        rhs = [-c for row in rest for c in row] + [Fraction(0)] * (s * s)
        x = solve(equations, rhs)
        if x is None:
            raise Obstruction(k, f"splitting equation singular at order {k}")
        p.append([x[r * s: (r + 1) * s] for r in range(s)])
        kept.append(diagonal)
    logger.debug(f"Splitting series computed through order {len(coefficients) - 1}")
    return p
