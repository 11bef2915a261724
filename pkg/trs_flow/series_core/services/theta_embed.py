"""
The real embedding Theta of complex matrices.
"""

from typing import Sequence

from ...shared.errors import ShapeError
from ..models.complex_series import ComplexSeries
from ..models.poly_matrix import PolyMatrix
from ..models.truncated_series import TruncatedSeries


def theta_embed(matrix: Sequence[Sequence[ComplexSeries]]) -> PolyMatrix:
    """
    Replace each entry a + ib by the 2x2 block a I_2 + b J_2, J_2 = [[0, -1], [1, 0]].

    Raises:
        ShapeError: the input is not square
    """
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise ShapeError("Theta embedding needs a square complex matrix")
    rows: list[list[TruncatedSeries]] = [[] for _ in range(2 * m)]
    for i, row in enumerate(matrix):
        for entry in row:
            rows[2 * i].extend([entry.re, -entry.im])
            rows[2 * i + 1].extend([entry.im, entry.re])
    return PolyMatrix.from_rows(rows)
