"""
Result models for vector field couples.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ...series_core.models.multi_series import MultiSeries
from ...linear_systems.models.reduction_result import ReductionResult
from .invariant_couple import InvariantCouple
from .transform_chain import TransformChain
from .trs_vf_form import TRSVFForm
from .vector_field_jet import VectorFieldJet


class InvarianceReport(BaseModel):
    """Outcome of the invariance check xi_x(Gamma) Gamma' = xi_y(Gamma)."""

    model_config = ConfigDict(frozen=True)

    holds: bool = Field(description="Residual vanishes through verified_order")
    verified_order: int = Field(description="Highest power of x checked")
    m: Optional[int] = Field(default=None, description="ord_x xi_x(x, Gamma_y(x))")
    failing_order: Optional[int] = Field(default=None, description="First power of x where the residual is nonzero")


class NormalizedCouple(BaseModel):
    """xi = x^e u (x^(p+1) d/dx + eta_y . d/dy) after translation and blow-ups."""

    model_config = ConfigDict(frozen=True)

    couple: InvariantCouple = Field(description="Transformed couple")
    chain: TransformChain = Field(description="Transformations applied")
    m: int = Field(ge=1, description="ord_x xi_x along the curve")
    e: int = Field(ge=0, description="Power of x factored out")
    p: int = Field(ge=-1, description="Rank of the normalized field")
    unit: MultiSeries = Field(description="Unit u")
    eta: VectorFieldJet = Field(description="Normalized field with eta_x = x^(p+1)")


class VFReduction(BaseModel):
    """Couple driven to TRS form with the chain and the linear reduction behind it."""

    model_config = ConfigDict(frozen=True)

    couple: InvariantCouple = Field(description="Couple in TRS coordinates")
    chain: TransformChain = Field(description="All transformations from the input coordinates")
    form: TRSVFForm = Field(description="Recognized TRS form")
    linear: Optional[ReductionResult] = Field(default=None, description="Reduction of the associated linear system")
