"""
IteratedTangents model.
Unit tangents of a curve germ and of its successive blow-up lifts.
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class IteratedTangents(BaseModel):
    """
    tangents[k] is the unit tangent at the k-th lifted point, a vector in R^(1+n)
    whose first entry is the x-direction. base_points[k] are the y-coordinates
    of that point in the chart x = x, y = x^k y_k.
    """

    model_config = ConfigDict(frozen=True)

    tangents: list[list[float]] = Field(default_factory=list)
    base_points: list[list[float]] = Field(default_factory=list)
    diagnostics: list[float] = Field(default_factory=list, description="Extrapolation disagreement per level")

    @model_validator(mode="after")
    def check_levels(self) -> "IteratedTangents":
        if len(self.base_points) != len(self.tangents):
            raise ValueError("One base point per tangent")
        return self

    @property
    def depth(self) -> int:
        return len(self.tangents)
