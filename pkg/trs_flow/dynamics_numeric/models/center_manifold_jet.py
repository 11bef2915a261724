"""
CenterManifoldJet model.
Jet of the graph w = h(x, z) of a center manifold of a TRS field.
"""

from pydantic import BaseModel, ConfigDict, Field

from ...series_core.models.multi_series import MultiSeries


class CenterManifoldJet(BaseModel):
    """
    h is a series in (x, z_1..z_c), one component per hyperbolic coordinate.

    z_index and w_index are the original y-coordinates of z and w.
    """

    model_config = ConfigDict(frozen=True)

    K: int = Field(ge=1, description="Total degree the jet is exact through")
    z_index: tuple[int, ...] = Field(description="Center coordinates (ker D(0))")
    w_index: tuple[int, ...] = Field(description="Hyperbolic coordinates")
    h: tuple[MultiSeries, ...] = Field(description="Graph components, one per w")
    flat_power: int = Field(ge=0, description="q + 1 + N")
    divisible: bool = Field(description="Every component is divisible by x^(q+1+N)")
