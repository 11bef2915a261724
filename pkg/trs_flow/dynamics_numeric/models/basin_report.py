"""
Basin report models.
Classification of seeds in a horn by their fate as x decreases.
"""

import enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class SeedVerdict(str, enum.Enum):
    STAYS = "stays"
    ESCAPES = "escapes"
    AMBIGUOUS = "ambiguous"


class SeedOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=0, description="Position in the seed list")
    seed: list[float]
    verdict: SeedVerdict
    x_exit: Optional[float] = Field(default=None, description="Abscissa where the seed left the horn")
    side: int = Field(default=0, description="Sign of the deviation along the probed line at exit")


class LineProbe(BaseModel):
    """Seeds along one coordinate line through the horn centre."""

    model_config = ConfigDict(frozen=True)

    axis: int = Field(ge=0)
    outcomes: list[SeedOutcome] = Field(default_factory=list)
    free: bool = Field(description="True when every seed on the line stays")
    boundary: Optional[float] = Field(default=None, description="Bisected coordinate of the staying point")


class BasinReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    x_seed: float = Field(gt=0)
    x_min: float = Field(gt=0)
    lines: list[LineProbe] = Field(default_factory=list)
    expected_dim: Optional[int] = Field(default=None, description="1 + u(D), when known")

    @property
    def empirical_dim(self) -> int:
        return 1 + sum(1 for line in self.lines if line.free)

    @property
    def counts(self) -> dict[str, int]:
        tally = {v.value: 0 for v in SeedVerdict}
        for line in self.lines:
            for outcome in line.outcomes:
                tally[outcome.verdict.value] += 1
        return tally

    @property
    def consistent(self) -> Optional[bool]:
        return None if self.expected_dim is None else self.expected_dim == self.empirical_dim
