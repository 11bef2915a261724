"""
Exact linear algebra over Q.
Thin wrappers around sympy's DomainMatrix so that the rest of the package
can keep working with plain Fraction matrices.
"""

from fractions import Fraction
from typing import Optional, Sequence

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


ConstMatrix = list[list[Fraction]]

LAMBDA = sympy.Symbol("lam")


def to_domain(rows: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    m = len(rows)
    n = len(rows[0]) if m else 0
    data = [[QQ(int(Fraction(c).numerator), int(Fraction(c).denominator)) for c in row] for row in rows]
    return DomainMatrix(data, (m, n), QQ)


def from_domain(dm: DomainMatrix) -> ConstMatrix:
    return [[Fraction(int(e.numerator), int(e.denominator)) for e in row] for row in dm.to_list()]


def identity(n: int) -> ConstMatrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: ConstMatrix, b: ConstMatrix) -> ConstMatrix:
    inner = len(b)
    cols = len(b[0]) if inner else 0
    return [[sum((row[k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for row in a]


def invert(rows: ConstMatrix) -> Optional[ConstMatrix]:
    """Inverse, or None for a singular matrix."""
    dm = to_domain(rows)
    if dm.det() == QQ(0):
        return None
    return from_domain(dm.inv())


def rank(rows: ConstMatrix) -> int:
    if not rows or not rows[0]:
        return 0
    return int(to_domain(rows).rank())


def nullspace(rows: ConstMatrix) -> list[list[Fraction]]:
    """Basis of the right kernel as a list of vectors."""
    if not rows:
        return []
    n = len(rows[0])
    rref, pivots = to_domain(rows).rref()
    reduced = from_domain(rref)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        basis.append(v)
    return basis


def solve(a: ConstMatrix, b: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """One solution of a x = b with free variables set to zero; None if inconsistent."""
    m = len(a)
    n = len(a[0]) if m else 0
    augmented = [list(row) + [b[i]] for i, row in enumerate(a)]
    rref, pivots = to_domain(augmented).rref()
    if n in pivots:
        return None
    reduced = from_domain(rref)
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = reduced[i][n]
    return x


def matrix_power(rows: ConstMatrix, e: int) -> ConstMatrix:
    result = identity(len(rows))
    for _ in range(e):
        result = matmul(result, rows)
    return result


def polynomial_at_matrix(coeffs: Sequence[Fraction], rows: ConstMatrix) -> ConstMatrix:
    """Evaluate sum coeffs[k] lam^(deg-k) at the matrix (Horner, leading first)."""
    n = len(rows)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in coeffs:
        acc = matmul(acc, rows)
        for i in range(n):
            acc[i][i] += c
    return acc


def charpoly_factors(rows: ConstMatrix) -> list[tuple[list[Fraction], int]]:
    """
    Factor the characteristic polynomial over Q.

    Returns monic factors as coefficient lists (leading first) with their
    multiplicities, in sympy's canonical order.
    """
    coeffs = to_domain(rows).charpoly()
    poly = sympy.Poly([QQ.to_sympy(c) for c in coeffs], LAMBDA, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for factor, mult in factors:
        monic = factor.monic()
        out.append(([Fraction(int(c.p), int(c.q)) for c in monic.all_coeffs()], int(mult)))
    return out


def block_diagonal(blocks: Sequence[ConstMatrix]) -> ConstMatrix:
    n = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, c in enumerate(row):
                out[offset + i][offset + j] = c
        offset += len(b)
    return out


def columns_to_matrix(columns: Sequence[Sequence[Fraction]]) -> ConstMatrix:
    n = len(columns[0])
    return [[columns[j][i] for j in range(len(columns))] for i in range(n)]


def from_sympy(matrix: sympy.Matrix) -> ConstMatrix:
    """Convert a sympy matrix with rational entries."""
    out = []
    for i in range(matrix.rows):
        row = []
        for j in range(matrix.cols):
            e = sympy.Rational(matrix[i, j])
            row.append(Fraction(int(e.p), int(e.q)))
        out.append(row)
    return out


def to_sympy(rows: ConstMatrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in rows])


def subtract(a: ConstMatrix, b: ConstMatrix) -> ConstMatrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def add(a: ConstMatrix, b: ConstMatrix) -> ConstMatrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: ConstMatrix, c: Fraction) -> ConstMatrix:
    return [[x * c for x in row] for row in a]


def zeros(n: int) -> ConstMatrix:
    return [[Fraction(0)] * n for _ in range(n)]


def is_zero_matrix(a: ConstMatrix) -> bool:
    return all(c == 0 for row in a for c in row)
