"""
OmegaReport model.
Numeric verification of the straightener's properties at sampled points.
"""

import enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class OmegaSign(str, enum.Enum):
    """Sign of the ODE satisfied by Omega_R."""
    INTEGRAL = "integral"  # x^(q+2) Omega' = -R Omega
    LEMMA = "lemma"  # x^(q+2) Omega' = R Omega


class OmegaReport(BaseModel):
    """Largest errors over the samples with a pass flag per property."""

    model_config = ConfigDict(frozen=True)

    samples: list[float] = Field(description="Sampled x > 0")
    tol: float = Field(description="Relative tolerance for the ODE residual")
    orthogonality_error: float = Field(description="max ||Omega^T Omega - I||")
    isometry_error: float = Field(description="max | ||Omega v|| - ||v|| | / ||v||")
    group_law_error: float = Field(description="max ||Omega_R Omega_-R - I||")
    axis_error: float = Field(description="max deviation from the identity on the axis")
    ode_residual: float = Field(description="Relative residual of the integral-sign ODE")
    ode_residual_opposite: float = Field(description="Relative residual with the opposite sign")
    supported_sign: OmegaSign = Field(description="Sign with the smaller residual")
    decay_ok: bool = Field(description="||x^M Omega(x)|| <= x^M at every sample")
    M: int = Field(description="Power of x used in the decay check")
    commutation_error: Optional[float] = Field(default=None, description="max ||C Omega - Omega C|| when C is given")

    @property
    def passed(self) -> bool:
        checks = [
            self.orthogonality_error <= 1e-10,
            self.isometry_error <= 1e-10,
            self.group_law_error <= 1e-10,
            self.axis_error <= 1e-12,
            self.ode_residual <= self.tol,
            self.supported_sign == OmegaSign.INTEGRAL,
            self.decay_ok,
        ]
        if self.commutation_error is not None:
            checks.append(self.commutation_error <= 1e-10)
        return all(checks)
