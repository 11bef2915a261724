"""
TransformChain model.
Ordered coordinate transformations, replayable on couples and on points.
"""

from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .coord_transform import CoordTransform

if TYPE_CHECKING:
    from .invariant_couple import InvariantCouple


class TransformChain(BaseModel):
    """phi = phi_1 o phi_2 o ... o phi_k, applied to a couple in list order."""

    model_config = ConfigDict(frozen=True)

    steps: list[CoordTransform] = Field(default_factory=list, description="Transformations in application order")

    def __len__(self) -> int:
        return len(self.steps)

    def extend(self, more: list[CoordTransform]) -> "TransformChain":
        return TransformChain(steps=[*self.steps, *more])

    def replay(self, couple: "InvariantCouple") -> "InvariantCouple":
        from ..services.apply_coord_transform import apply_coord_transform

        for step in self.steps:
            couple = apply_coord_transform(couple, step)
        return couple

    def determinacy(self, s: int) -> int:
        """h_1 o ... o h_k evaluated at s."""
        for step in reversed(self.steps):
            s = s + step.shift
        return s

    def to_original(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        """Map a point of the final chart back to the original coordinates."""
        point = (x, np.asarray(y, dtype=float))
        for step in reversed(self.steps):
            point = step.push(*point)
        return point

    def to_transformed(self, x: float, y: np.ndarray) -> tuple[float, np.ndarray]:
        """Map an original point into the final chart (x > 0 past ramifications)."""
        point = (x, np.asarray(y, dtype=float))
        for step in self.steps:
            point = step.pull(*point)
        return point
