"""
Direct sum of polynomial matrices.
"""

from ..models.poly_matrix import PolyMatrix
from ..models.truncated_series import TruncatedSeries


def direct_sum(m: PolyMatrix, n: PolyMatrix) -> PolyMatrix:
    """Block-diagonal matrix M + N; off-diagonal blocks are exact zeros."""
    if m.n and n.n and m.trunc != n.trunc:
        raise ValueError(f"Direct sum needs equal truncation orders ({m.trunc} vs {n.trunc})")
    k = m.trunc if m.n else n.trunc
    size = m.n + n.n
    zero = TruncatedSeries.zero(k)
    rows = [[zero] * size for _ in range(size)]
    for i in range(m.n):
        for j in range(m.n):
            rows[i][j] = m.entries[i][j]
    for i in range(n.n):
        for j in range(n.n):
            rows[m.n + i][m.n + j] = n.entries[i][j]
    return PolyMatrix.from_rows(rows)
