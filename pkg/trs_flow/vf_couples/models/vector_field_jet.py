"""
VectorFieldJet model.
Finite jet of xi = xi_x d/dx + xi_y . d/dy in coordinates (x, y_1..y_n).
"""

from typing import Callable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...series_core.models.multi_series import MultiSeries
from ...series_core.models.truncated_series import TruncatedSeries
from ...linear_systems.models.linear_system import LinearSystem


class VectorFieldJet(BaseModel):
    """Components known through a common total degree."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(gt=0, description="Number of y variables")
    xi_x: MultiSeries = Field(description="x component")
    xi_y: tuple[MultiSeries, ...] = Field(description="y components")

    @model_validator(mode="after")
    def check_components(self) -> "VectorFieldJet":
        if len(self.xi_y) != self.n:
            raise ValueError(f"Expected {self.n} y components, got {len(self.xi_y)}")
        if any(c.n != self.n for c in self.components()):
            raise ValueError("Every component must live in the same n + 1 variables")
        truncs = {c.trunc for c in self.components()}
        if len(truncs) > 1:
            raise ValueError(f"Components must share one truncation, found {sorted(truncs)}")
        return self

    @classmethod
    def make(cls, xi_x: MultiSeries, xi_y: Sequence[MultiSeries]) -> "VectorFieldJet":
        """Build from components, truncating all to the smallest truncation."""
        k = min([xi_x.trunc] + [c.trunc for c in xi_y])
        return cls(n=xi_x.n, xi_x=xi_x.truncate(k), xi_y=tuple(c.truncate(k) for c in xi_y))

    @classmethod
    def from_linear_system(cls, system: LinearSystem) -> "VectorFieldJet":
        """x^(p+1) d/dx + (A(x) y) . d/dy for a singular system."""
        if system.p < 0:
            raise ValueError("A regular system has no x^(p+1) d/dx field")
        n, k = system.n, system.trunc + 1
        xi_x = MultiSeries.monomial([system.p + 1] + [0] * n, 1, n, k)
        xi_y = []
        for i in range(n):
            acc = MultiSeries.zero(n, k)
            for j in range(n):
                entry = system.A.entry(i, j)
                acc = acc + MultiSeries.make(
                    n, k, {(d,) + tuple(int(t == j) for t in range(n)): c for d, c in enumerate(entry.coeffs)}
                )
            xi_y.append(acc)
        return cls.make(xi_x, xi_y)

    @property
    def trunc(self) -> int:
        return self.xi_x.trunc

    def components(self) -> list[MultiSeries]:
        return [self.xi_x, *self.xi_y]

    def vanishes_at_origin(self) -> bool:
        return not any(c.is_unit() for c in self.components())

    def at_curve(self, gamma: Sequence[TruncatedSeries]) -> list[TruncatedSeries]:
        """Each component composed with y = gamma(x)."""
        return [c.at_curve(gamma) for c in self.components()]

    def truncate(self, k: int) -> "VectorFieldJet":
        return VectorFieldJet.make(self.xi_x.truncate(k), [c.truncate(k) for c in self.xi_y])

    def numeric(self) -> Callable[[float, np.ndarray], np.ndarray]:
        """Float evaluator of the polynomial jet, returning (xi_x, xi_y...)."""
        parts = [c.numeric() for c in self.components()]

        def evaluate(x: float, y: np.ndarray) -> np.ndarray:
            return np.array([f(x, y) for f in parts])

        return evaluate

    def __str__(self) -> str:
        lines = [f"xi_x = {self.xi_x}"] + [f"xi_y{i + 1} = {c}" for i, c in enumerate(self.xi_y)]
        return "\n".join(lines)
