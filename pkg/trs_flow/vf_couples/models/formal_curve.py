"""
FormalCurve model.
Non-singular formal curve y = Gamma_y(x) parametrized by x.
"""

from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ...series_core.models.truncated_series import TruncatedSeries


class FormalCurve(BaseModel):
    """Gamma_y in (x R[[x]])^n known through a common order."""

    model_config = ConfigDict(frozen=True)

    gamma_y: tuple[TruncatedSeries, ...] = Field(description="Components Gamma_y1..Gamma_yn")

    @field_validator("gamma_y")
    @classmethod
    def check_components(cls, v: tuple[TruncatedSeries, ...]) -> tuple[TruncatedSeries, ...]:
        if not v:
            raise ValueError("A curve needs at least one component")
        if any(g.coeffs[0] != 0 for g in v):
            raise ValueError("Curve components must vanish at x = 0")
        return v

    @model_validator(mode="after")
    def check_trunc(self) -> "FormalCurve":
        if len({g.trunc for g in self.gamma_y}) > 1:
            raise ValueError("Curve components must share one truncation order")
        return self

    @classmethod
    def make(cls, components: Sequence[TruncatedSeries]) -> "FormalCurve":
        k = min(g.trunc for g in components)
        return cls(gamma_y=tuple(g.truncate(k) for g in components))

    @classmethod
    def zero(cls, n: int, trunc: int) -> "FormalCurve":
        return cls(gamma_y=tuple(TruncatedSeries.zero(trunc) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.gamma_y)

    @property
    def trunc(self) -> int:
        return self.gamma_y[0].trunc

    def contact_order(self) -> Optional[int]:
        """ord_x(Gamma_y); None when the curve is y = 0 to known order."""
        orders = [v for g in self.gamma_y if (v := g.order()) is not None]
        return min(orders) if orders else None

    def contact_at_least(self, k: int) -> bool:
        v = self.contact_order()
        return (self.trunc + 1 if v is None else v) >= k

    def derivative(self) -> list[TruncatedSeries]:
        return [g.derivative() for g in self.gamma_y]

    def jet(self, k: int) -> list[TruncatedSeries]:
        return [g.jet(k) for g in self.gamma_y]

    def evaluate(self, x: float) -> np.ndarray:
        return np.array([g.evaluate(x) for g in self.gamma_y])
