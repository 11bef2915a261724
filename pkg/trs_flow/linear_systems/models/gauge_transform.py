"""
Gauge transformation models.
Polynomial regular gauges, diagonal monomial gauges and ramifications.
"""

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator, model_validator

from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.services.linear_algebra import invert


class PolyRegular(BaseModel):
    """y = P(x) z with P(0) invertible."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["poly_regular"] = "poly_regular"
    P: PolyMatrix = Field(description="Polynomial gauge matrix")

    @model_validator(mode="after")
    def check_regular(self) -> "PolyRegular":
        if invert(self.P.at_zero()) is None:
            raise ValueError("PolyRegular gauge needs det P(0) != 0")
        return self


class DiagMonomial(BaseModel):
    """y = diag(x^k_1, ..., x^k_n) z."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["diag_monomial"] = "diag_monomial"
    exponents: tuple[int, ...] = Field(description="Non-negative exponents, not all zero")

    @field_validator("exponents")
    @classmethod
    def check_exponents(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(k < 0 for k in v):
            raise ValueError("Diagonal monomial exponents must be non-negative")
        if not any(v):
            raise ValueError("Diagonal monomial exponents cannot all be zero")
        return v


class Ramification(BaseModel):
    """Change of independent variable x = z^r."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["ramification"] = "ramification"
    r: int = Field(ge=2, description="Ramification index")


GaugeTransform = Annotated[Union[PolyRegular, DiagMonomial, Ramification], Field(discriminator="kind")]

gauge_chain_adapter: TypeAdapter[list[GaugeTransform]] = TypeAdapter(list[GaugeTransform])
