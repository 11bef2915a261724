"""
StraightenedField model.
The TRS field pulled back by (x, y) = (x, Omega_R(x) z) and divided by x^s.
"""

from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ...series_core.models.poly_matrix import PolyMatrix
from ...vf_couples.models.trs_vf_form import TRSVFForm
from .straightener_eval import StraightenerEval


class StraightenedField(BaseModel):
    """
    x^(q-s+1) d/dx + [(x^-s (D - R) + x^(q-s) C) z + x^(q+1-s+N) g(x, z)] . d/dz

    with g(x, z) = x^M Omega^-1 V(x, x^M Omega z). The principal part is exact;
    g is evaluated numerically.
    """

    model_config = ConfigDict(frozen=True)

    form: TRSVFForm = Field(description="Input TRS form of type (q, N + M, M)")
    straightener: StraightenerEval = Field(description="Omega_R evaluator")
    s: int = Field(ge=0, description="ord_x (D - R + x^q C)")
    reduced_D: PolyMatrix = Field(description="x^-s (D - R)")
    N: int = Field(ge=0, description="Flatness left after removing the M-scaling")

    @property
    def reduced_q(self) -> int:
        return self.form.q - self.s

    @property
    def reduced_type(self) -> tuple[int, int, int]:
        return (self.reduced_q, self.N, 0)

    @property
    def n(self) -> int:
        return self.form.n

    def evaluator(self) -> Callable[[float, np.ndarray], np.ndarray]:
        """Float evaluator (x, z) -> (x-component, z-components)."""
        n, m, q = self.n, self.form.M, self.reduced_q
        entries = [[self.reduced_D.entry(i, j) for j in range(n)] for i in range(n)]
        c = np.array([[float(v) for v in row] for row in self.form.C.at_zero()])
        vestigial = [comp.numeric() for comp in self.form.V]
        omega = self.straightener.omega
        flat_power = q + 1 + self.N

        def evaluate(x: float, z: np.ndarray) -> np.ndarray:
            z = np.asarray(z, dtype=float)
            d = np.array([[e.evaluate(x) for e in row] for row in entries])
            rot = omega(x)
            y = x**m * (rot @ z)
            g = x**m * (rot.T @ np.array([f(x, y) for f in vestigial]))
            dz = (d + x**q * c) @ z + x**flat_power * g
            return np.concatenate(([x ** (q + 1)], dz))

        return evaluate

    def evaluate(self, x: float, z: np.ndarray) -> np.ndarray:
        return self.evaluator()(x, z)

    def to_original(self, x: float, z: np.ndarray) -> np.ndarray:
        return self.straightener.omega(x) @ np.asarray(z, dtype=float)

    def to_straightened(self, x: float, y: np.ndarray) -> np.ndarray:
        return self.straightener.omega(x).T @ np.asarray(y, dtype=float)
