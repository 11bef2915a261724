"""
Spectrum model.
Eigenvalues of a constant rational matrix, exact where the characteristic
polynomial splits into factors of degree <= 2.
"""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class Eigenvalue(BaseModel):
    """One eigenvalue with its multiplicity and the rational factor it is a root of."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    real: float = Field(description="Real part (float approximation)")
    imag: float = Field(description="Imaginary part (float approximation)")
    multiplicity: int = Field(gt=0)
    exact: Optional[str] = Field(default=None, description="Exact value in sympy notation, if available")
    factor: tuple[Fraction, ...] = Field(description="Monic rational factor, leading coefficient first")

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)


class Spectrum(BaseModel):
    """Eigenvalues with multiplicities; complex ones listed in conjugate pairs."""

    model_config = ConfigDict(frozen=True)

    eigenvalues: tuple[Eigenvalue, ...] = Field(default=())
    exact: bool = Field(description="False when some factor of degree > 2 was solved in floats")

    @property
    def dimension(self) -> int:
        return sum(e.multiplicity for e in self.eigenvalues)

    def max_real_part(self) -> float:
        return max(e.real for e in self.eigenvalues)
