"""
RotationalMatrix model.
R(x) = Theta(Diag(b_1(x), ..., b_k(x))) + 0 on the axis, with b_j purely imaginary.
"""

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.models.truncated_series import TruncatedSeries
from ...shared.rational import format_rational, to_fraction


class RotationPair(BaseModel):
    """b(x) = i (b^0 + b^1 x + ...) acting on coordinates (start, start + 1)."""

    model_config = ConfigDict(frozen=True)

    start: int = Field(ge=0, description="First coordinate of the Theta pair")
    b: tuple[Fraction, ...] = Field(description="Coefficients of Im b(x), lowest first")

    @field_validator("b", mode="before")
    @classmethod
    def parse_b(cls, v: Any) -> tuple[Fraction, ...]:
        return tuple(to_fraction(c) for c in v)

    @field_validator("b")
    @classmethod
    def check_nonzero(cls, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        if not any(v):
            raise ValueError("Rotation polynomials must be nonzero")
        return v

    @field_serializer("b")
    def dump_b(self, v: tuple[Fraction, ...]) -> list[str]:
        return [format_rational(c) for c in v]


class RotationalMatrix(BaseModel):
    """Rotational matrix of a given degree on R^n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Matrix size")
    degree: int = Field(ge=0, description="Polynomial degree bound of every b_j")
    pairs: tuple[RotationPair, ...] = Field(default=(), description="Rotation planes")

    @model_validator(mode="after")
    def check_pairs(self) -> "RotationalMatrix":
        used: set[int] = set()
        for pair in self.pairs:
            if pair.start + 1 >= self.n:
                raise ValueError(f"Pair at {pair.start} does not fit in size {self.n}")
            if {pair.start, pair.start + 1} & used:
                raise ValueError(f"Pair at {pair.start} overlaps another pair")
            used.update((pair.start, pair.start + 1))
            if len(pair.b) > self.degree + 1:
                raise ValueError(f"Pair at {pair.start} has degree above {self.degree}")
        return self

    @property
    def axis_dim(self) -> int:
        return self.n - 2 * len(self.pairs)

    def coefficients(self, pair: RotationPair) -> list[Fraction]:
        """Coefficients b^0..b^degree, zero padded."""
        return list(pair.b) + [Fraction(0)] * (self.degree + 1 - len(pair.b))

    def negate(self) -> "RotationalMatrix":
        return RotationalMatrix(
            n=self.n,
            degree=self.degree,
            pairs=tuple(RotationPair(start=p.start, b=tuple(-c for c in p.b)) for p in self.pairs),
        )

    def matrix(self, trunc: int) -> PolyMatrix:
        """R as a polynomial matrix known through x^trunc."""
        zero = TruncatedSeries.zero(trunc)
        rows = [[zero for _ in range(self.n)] for _ in range(self.n)]
        for pair in self.pairs:
            b = TruncatedSeries.make(pair.b[: trunc + 1], trunc)
            s = pair.start
            rows[s + 1][s] = b
            rows[s][s + 1] = -b
        return PolyMatrix.from_rows(rows)
