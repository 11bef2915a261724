"""
PolyMatrix model.
Square matrices of TruncatedSeries with a common truncation order.
"""

from fractions import Fraction
from typing import Any, Callable, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ...shared.errors import NotRegular, ShapeError
from .truncated_series import TruncatedSeries


ConstMatrix = list[list[Fraction]]


class PolyMatrix(BaseModel):
    """
    n x n matrix over R[[x]] known through x^trunc.

    Entries are stored row-major; construction through from_rows truncates
    every entry to the smallest truncation present.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, description="Matrix size")
    entries: tuple[tuple[TruncatedSeries, ...], ...] = Field(description="Row-major entries")

    @field_validator("entries", mode="before")
    @classmethod
    def parse_entries(cls, v: Any) -> Any:
        return tuple(tuple(row) for row in v)

    @model_validator(mode="after")
    def check_shape(self) -> "PolyMatrix":
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"Matrix entries are not {self.n}x{self.n}")
        truncs = {e.trunc for row in self.entries for e in row}
        if len(truncs) > 1:
            raise ValueError(f"Entries must share one truncation order, found {sorted(truncs)}")
        return self

    # Construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[TruncatedSeries]]) -> "PolyMatrix":
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ShapeError("Matrix rows must form a square")
        if n == 0:
            return cls.model_construct(n=0, entries=())
        k = min(e.trunc for row in rows for e in row)
        entries = tuple(tuple(e if e.trunc == k else e.truncate(k) for e in row) for row in rows)
        return cls.model_construct(n=n, entries=entries)

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Sequence[Sequence[Union[int, Fraction]]]], trunc: int) -> "PolyMatrix":
        """Build from coefficient lists: coefficients[i][j] lists entry (i, j) by power of x."""
        return cls.from_rows([[TruncatedSeries.make(c, trunc) for c in row] for row in coefficients])

    @classmethod
    def constant(cls, matrix: Sequence[Sequence[Union[int, Fraction]]], trunc: int) -> "PolyMatrix":
        return cls.from_rows([[TruncatedSeries.constant(c, trunc) for c in row] for row in matrix])

    @classmethod
    def identity(cls, n: int, trunc: int) -> "PolyMatrix":
        return cls.constant([[1 if i == j else 0 for j in range(n)] for i in range(n)], trunc)

    @classmethod
    def zero(cls, n: int, trunc: int) -> "PolyMatrix":
        return cls.constant([[0] * n for _ in range(n)], trunc)

    @classmethod
    def from_const_sequence(cls, coefficients: Sequence[ConstMatrix], trunc: int) -> "PolyMatrix":
        """Build sum_k coefficients[k] x^k."""
        n = len(coefficients[0])
        rows = [
            [TruncatedSeries.make([coefficients[k][i][j] for k in range(len(coefficients))], trunc) for j in range(n)]
            for i in range(n)
        ]
        return cls.from_rows(rows)

    # Inspection

    @property
    def trunc(self) -> int:
        return self.entries[0][0].trunc if self.n else 0

    def entry(self, i: int, j: int) -> TruncatedSeries:
        return self.entries[i][j]

    def coefficient(self, k: int) -> ConstMatrix:
        """Constant matrix multiplying x^k."""
        return [[e.coefficient(k) for e in row] for row in self.entries]

    def at_zero(self) -> ConstMatrix:
        return self.coefficient(0)

    def order(self) -> Optional[int]:
        """Smallest entry order, None when the matrix is zero to known precision."""
        orders = [v for row in self.entries for e in row if (v := e.order()) is not None]
        return min(orders) if orders else None

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_constant(self) -> bool:
        return all(c == 0 for row in self.entries for e in row for c in e.coeffs[1:])

    def degree(self) -> int:
        return max((e.degree() for row in self.entries for e in row), default=-1)

    # Arithmetic

    def map(self, fn: Callable[[TruncatedSeries], TruncatedSeries]) -> "PolyMatrix":
        return PolyMatrix.from_rows([[fn(e) for e in row] for row in self.entries])

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_size(other)
        return PolyMatrix.from_rows([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_size(other)
        return PolyMatrix.from_rows([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self) -> "PolyMatrix":
        return self.map(lambda e: -e)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_size(other)
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, self.n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(row)
        return PolyMatrix.from_rows(rows)

    def scale(self, c: Union[int, Fraction]) -> "PolyMatrix":
        return self.map(lambda e: e.scale(c))

    def derivative(self) -> "PolyMatrix":
        return self.map(lambda e: e.derivative())

    def shift(self, k: int) -> "PolyMatrix":
        """Multiply by x^k."""
        return self.map(lambda e: e.shift(k))

    def exact_divide(self, k: int) -> "PolyMatrix":
        return self.map(lambda e: e.exact_divide(k))

    def truncate(self, k: int) -> "PolyMatrix":
        return self.map(lambda e: e.truncate(k))

    def jet(self, k: int) -> "PolyMatrix":
        return self.map(lambda e: e.jet(k))

    def ramify(self, r: int) -> "PolyMatrix":
        return self.map(lambda e: e.ramify(r))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix.from_rows([[self.entries[j][i] for j in range(self.n)] for i in range(self.n)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[TruncatedSeries]]:
        return [[self.entries[i][j] for j in cols] for i in rows]

    def inverse(self) -> "PolyMatrix":
        """Order-by-order inverse; the constant term must be invertible."""
        from ..services.linear_algebra import invert

        inv0 = invert(self.at_zero())
        if inv0 is None:
            raise NotRegular("Constant term of the matrix is singular")
        k = self.trunc
        coeffs = [self.coefficient(i) for i in range(k + 1)]
        out: list[ConstMatrix] = [inv0]
        for m in range(1, k + 1):
            acc = [[Fraction(0)] * self.n for _ in range(self.n)]
            for i in range(1, m + 1):
                acc = _const_add(acc, _const_mul(coeffs[i], out[m - i]))
            out.append(_const_scale(_const_mul(inv0, acc), -1))
        return PolyMatrix.from_const_sequence(out, k)

    def _check_size(self, other: "PolyMatrix") -> None:
        if self.n != other.n:
            raise ShapeError(f"Size mismatch: {self.n} vs {other.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return "[" + ",\n ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries) + "]"


def _const_mul(a: ConstMatrix, b: ConstMatrix) -> ConstMatrix:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def _const_add(a: ConstMatrix, b: ConstMatrix) -> ConstMatrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _const_scale(a: ConstMatrix, c: Union[int, Fraction]) -> ConstMatrix:
    return [[x * c for x in row] for row in a]
