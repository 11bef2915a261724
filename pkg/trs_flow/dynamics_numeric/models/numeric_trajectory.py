"""
NumericTrajectory model.
Sampled solution of dy/dx = F(x, y) with solver metadata.
"""

from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class NumericTrajectory(BaseModel):
    """
    Samples (x_i, y_i) with x strictly increasing and positive.

    Backward integrations are stored reversed, so every trajectory reads from
    small x to large x. offsets is set by paired integration.
    """

    model_config = ConfigDict(frozen=True)

    xs: list[float] = Field(description="Sample abscissae, strictly increasing")
    ys: list[list[float]] = Field(description="Sample values, one row per abscissa")
    offsets: Optional[list[list[float]]] = Field(default=None, description="Offset to a reference trajectory")
    method: str = Field(description="Solver that produced the final samples")
    rtol: float = Field(gt=0)
    atol: float = Field(gt=0)
    nfev: int = Field(default=0, ge=0, description="Right-hand side evaluations")
    njev: int = Field(default=0, ge=0, description="Jacobian evaluations")
    nlu: int = Field(default=0, ge=0, description="LU decompositions")
    stiff_fallback: bool = Field(default=False, description="True when the explicit solver was abandoned")
    event_x: Optional[float] = Field(default=None, description="Abscissa where a stopping event fired")
    message: str = Field(default="", description="Solver status message")

    @model_validator(mode="after")
    def check_samples(self) -> "NumericTrajectory":
        if len(self.xs) < 2:
            raise ValueError("A trajectory needs at least two samples")
        if len(self.ys) != len(self.xs):
            raise ValueError(f"{len(self.ys)} value rows for {len(self.xs)} abscissae")
        if self.offsets is not None and len(self.offsets) != len(self.xs):
            raise ValueError("Offsets must have one row per abscissa")
        if self.xs[0] <= 0:
            raise ValueError("Trajectory abscissae must be positive")
        if any(b <= a for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("Trajectory abscissae must be strictly increasing")
        return self

    @property
    def x(self) -> np.ndarray:
        return np.asarray(self.xs)

    @property
    def y(self) -> np.ndarray:
        return np.asarray(self.ys)

    @property
    def n(self) -> int:
        return len(self.ys[0])

    @property
    def window(self) -> tuple[float, float]:
        return self.xs[0], self.xs[-1]

    def to_csv(self, path: Union[str, Path]) -> None:
        """Columns x, y1..yn (and d1..dn for offsets)."""
        columns = [self.x[:, None], self.y]
        header = ["x"] + [f"y{i + 1}" for i in range(self.n)]
        if self.offsets is not None:
            columns.append(np.asarray(self.offsets))
            header += [f"d{i + 1}" for i in range(self.n)]
        np.savetxt(path, np.hstack(columns), delimiter=",", header=",".join(header), comments="", fmt="%.17g")

    def to_json(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.model_dump_json(indent=2))
