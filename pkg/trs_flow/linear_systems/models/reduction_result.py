"""
ReductionResult model.
Outcome of a full reduction: the gauge chain and where it leads.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .gauge_transform import GaugeTransform
from .linear_system import LinearSystem
from .trs_linear_form import TRSLinearForm


class ReductionResult(BaseModel):
    """Either a regular system or a TRS form with good-spectrum residual part."""

    model_config = ConfigDict(frozen=True)

    chain: list[GaugeTransform] = Field(default_factory=list, description="Gauges in application order")
    system: LinearSystem = Field(description="System obtained by replaying the chain")
    form: Optional[TRSLinearForm] = Field(default=None, description="TRS form when the result is singular")

    @property
    def regular(self) -> bool:
        return self.system.is_regular
