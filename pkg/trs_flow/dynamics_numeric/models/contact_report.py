"""
Contact report models.
Numerical evidence that a trajectory follows a formal curve, or another trajectory.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .numeric_trajectory import NumericTrajectory


class ContactOrder(BaseModel):
    """Fit of ||gamma(x) - j_N Gamma(x)|| against log x for one N."""

    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=0)
    sup_ratio: float = Field(description="max ||gamma - j_N Gamma|| / x^(N+1) over the window")
    slope: float = Field(description="Fitted slope of log residual vs log x; inf when the residual vanishes")
    certified: bool


class ContactReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    window: tuple[float, float]
    orders: list[ContactOrder] = Field(default_factory=list)
    slope_margin: float = Field(default=0.1, description="Certification accepts slope >= N + 1 - margin")

    @property
    def max_certified(self) -> Optional[int]:
        """Largest N with every N' <= N certified."""
        best: Optional[int] = None
        for order in self.orders:
            if not order.certified:
                break
            best = order.N
        return best


class FlatContactReport(BaseModel):
    """Difference of two trajectories fitted as O(x^K) for every K <= K_max."""

    model_config = ConfigDict(frozen=True)

    window: tuple[float, float]
    K_max: int = Field(ge=0)
    slope: float = Field(description="Fitted slope of log ||difference|| vs log x; inf when it vanishes")
    failing_K: Optional[int] = Field(default=None, description="Smallest K not certified; 0 when the difference grows")
    capped: bool = Field(default=False, description="True when the difference underflowed to zero")

    @property
    def flat(self) -> bool:
        return self.failing_K is None


class ShootResult(BaseModel):
    """An asymptotic shot and its contact report."""

    model_config = ConfigDict(frozen=True)

    trajectory: NumericTrajectory
    contact: ContactReport
    direction: str = Field(description="'forward' from the small end or 'backward' from the large end")
