"""
JobConfig model.
Every knob of one command-line job; echoed into each file the job writes.
"""

import enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ...settings import get_settings


class Command(str, enum.Enum):
    REDUCE_LINEAR = "reduce-linear"
    REDUCE_VF = "reduce-vf"
    TRAJECTORY = "trajectory"
    VERIFY = "verify"
    OMEGA_EVAL = "omega-eval"


def _split(v: Any, parts: int, label: str) -> Any:
    if isinstance(v, str):
        pieces = v.split(":")
        if len(pieces) != parts:
            raise ValueError(f"{label} must have {parts} colon-separated parts, got {v!r}")
        return tuple(pieces)
    return v


class JobConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    inputs: list[str] = Field(min_length=1, description="Input file paths")
    out_dir: str = Field(default="out", description="Directory the job writes to")
    working_order: int = Field(default_factory=lambda: get_settings().working_order, ge=1)
    fuel: int = Field(default_factory=lambda: get_settings().fuel, ge=1)
    tol: float = Field(default_factory=lambda: get_settings().tol, gt=0)
    cluster_tol: float = Field(default_factory=lambda: get_settings().cluster_tol, gt=0)
    seed: int = Field(default_factory=lambda: get_settings().seed)
    N: int = Field(default=0, ge=0, description="Target extra flatness of the vestigial part")
    M: int = Field(default=0, ge=0, description="Target weight of y in the vestigial part")
    seed_order: Optional[int] = Field(default=None, ge=0, description="Jet order K of the shooting seed")
    window: Optional[tuple[float, float]] = Field(default=None, description="x0:x1")
    horn: Optional[tuple[int, float, float]] = Field(default=None, description="k:C:eps")
    points: list[float] = Field(default_factory=list, description="Abscissae for omega-eval")
    replay: Optional[str] = Field(default=None, description="Chain file to replay instead of reducing")

    @field_validator("window", mode="before")
    @classmethod
    def parse_window(cls, v: Any) -> Any:
        return _split(v, 2, "window")

    @field_validator("window")
    @classmethod
    def check_window(cls, v: Optional[tuple[float, float]]) -> Optional[tuple[float, float]]:
        if v is not None and not 0 < v[0] < v[1]:
            raise ValueError(f"window must satisfy 0 < x0 < x1, got {v}")
        return v

    @field_validator("horn", mode="before")
    @classmethod
    def parse_horn(cls, v: Any) -> Any:
        return _split(v, 3, "horn")

    @field_validator("horn")
    @classmethod
    def check_horn(cls, v: Optional[tuple[int, float, float]]) -> Optional[tuple[int, float, float]]:
        if v is not None and (v[0] < 1 or v[1] <= 0 or v[2] <= 0):
            raise ValueError(f"horn needs k >= 1 and positive C, eps, got {v}")
        return v

    @field_validator("points", mode="before")
    @classmethod
    def parse_points(cls, v: Any) -> Any:
        if isinstance(v, str):
            return [p for p in v.split(",") if p.strip()]
        return v

    @field_validator("points")
    @classmethod
    def check_points(cls, v: list[float]) -> list[float]:
        if any(p <= 0 for p in v):
            raise ValueError("omega-eval points must be positive")
        return v
