"""
Coordinate transformation models.
Polynomial translations, polynomial regular maps, diagonal monomial blow-ups
and ramifications of (x, y).
"""

from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator, model_validator

from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.models.truncated_series import TruncatedSeries
from ...series_core.services.linear_algebra import invert


class PolyTranslation(BaseModel):
    """(x, y) = (x, beta(x) + y~) with beta(0) = 0."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["poly_translation"] = "poly_translation"
    beta: tuple[TruncatedSeries, ...] = Field(description="Polynomial components, zero at x = 0")

    @field_validator("beta")
    @classmethod
    def check_beta(cls, v: tuple[TruncatedSeries, ...]) -> tuple[TruncatedSeries, ...]:
        if any(b.coeffs[0] != 0 for b in v):
            raise ValueError("Translation components must vanish at x = 0")
        return v

    @property
    def shift(self) -> int:
        return 0

    def push(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        return x, np.asarray(y, dtype=float) + np.array([b.evaluate(x) for b in self.beta])

    def pull(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        return x, np.asarray(y, dtype=float) - np.array([b.evaluate(x) for b in self.beta])


class PolyRegularCT(BaseModel):
    """(x, y) = (x, P(x) y~) with P(0) invertible."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["poly_regular"] = "poly_regular"
    P: PolyMatrix = Field(description="Polynomial matrix")

    @model_validator(mode="after")
    def check_regular(self) -> "PolyRegularCT":
        if invert(self.P.at_zero()) is None:
            raise ValueError("Polynomial regular map needs det P(0) != 0")
        return self

    @classmethod
    def permutation(cls, order: list[int]) -> "PolyRegularCT":
        """y = Pi y~ with y~_a = y_order[a]."""
        n = len(order)
        rows = [[0] * n for _ in range(n)]
        for a, i in enumerate(order):
            rows[i][a] = 1
        return cls(P=PolyMatrix.constant(rows, 0))

    @property
    def shift(self) -> int:
        return 0

    def matrix_at(self, x: float) -> np.ndarray:
        n = self.P.n
        return np.array([[self.P.entry(i, j).evaluate(x) for j in range(n)] for i in range(n)])

    def push(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        return x, self.matrix_at(x) @ np.asarray(y, dtype=float)

    def pull(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        return x, np.linalg.solve(self.matrix_at(x), np.asarray(y, dtype=float))


class DiagMonomialCT(BaseModel):
    """(x, y) = (x, x y~_1, ..., x y~_k, y~_(k+1), ..., y~_n)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["diag_monomial"] = "diag_monomial"
    k: int = Field(gt=0, description="Number of leading coordinates blown up")

    @property
    def shift(self) -> int:
        return 1

    def push(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        out = np.array(y, dtype=float)
        out[: self.k] *= x
        return x, out

    def pull(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        out = np.array(y, dtype=float)
        out[: self.k] /= x
        return x, out


class RamificationCT(BaseModel):
    """(x, y) = (x~^r, y~); numeric maps assume x > 0."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["ramification"] = "ramification"
    r: int = Field(ge=2, description="Ramification index")

    @property
    def shift(self) -> int:
        return 0

    def push(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        return x ** self.r, np.asarray(y, dtype=float)

    def pull(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        return x ** (1.0 / self.r), np.asarray(y, dtype=float)


CoordTransform = Annotated[
    Union[PolyTranslation, PolyRegularCT, DiagMonomialCT, RamificationCT], Field(discriminator="kind")
]

coord_chain_adapter: TypeAdapter[list[CoordTransform]] = TypeAdapter(list[CoordTransform])
