"""
InvariantCouple model.
A vector field jet with a formal curve in the same adapted coordinates.
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .formal_curve import FormalCurve
from .vector_field_jet import VectorFieldJet


class InvariantCouple(BaseModel):
    """
    (xi, Gamma) in adapted coordinates.

    Invariance is a property checked by check_invariance, not enforced here,
    so couples failing it can still be inspected.
    """

    model_config = ConfigDict(frozen=True)

    vf: VectorFieldJet = Field(description="Vector field jet")
    curve: FormalCurve = Field(description="Formal curve")

    @model_validator(mode="after")
    def check_dimensions(self) -> "InvariantCouple":
        if self.vf.n != self.curve.n:
            raise ValueError(f"Field has {self.vf.n} y variables, curve has {self.curve.n} components")
        return self

    @property
    def n(self) -> int:
        return self.vf.n
