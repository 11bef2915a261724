"""
StraightenerEval model.
Omega_R(x) = exp(int_x^oo R(t) / t^(q+2) dt), a direct sum of plane rotations.
"""

import math
from fractions import Fraction

import mpmath
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...shared.errors import DomainError
from .rotational_matrix import RotationalMatrix


class StraightenerEval(BaseModel):
    """
    Evaluator of Omega_R for x > 0.

    Angles alpha_j(x) = sum_i b_j^i / ((q+1-i) x^(q+1-i)) are summed in
    extended precision and reduced mod 2 pi before the trigonometric step,
    since they grow like x^-(q+1).
    """

    model_config = ConfigDict(frozen=True)

    R: RotationalMatrix = Field(description="Rotational matrix")
    q_param: int = Field(ge=0, description="Exponent: angles use powers x^-(q+1) .. x^-1")

    @model_validator(mode="after")
    def check_degree(self) -> "StraightenerEval":
        if self.R.degree > self.q_param:
            raise ValueError(f"Rotational matrix of degree {self.R.degree} needs q_param >= {self.R.degree}")
        return self

    @property
    def n(self) -> int:
        return self.R.n

    def angle_terms(self) -> list[list[tuple[Fraction, int]]]:
        """Per pair, the (coefficient, power of 1/x) terms of alpha_j."""
        q = self.q_param
        out = []
        for pair in self.R.pairs:
            terms = []
            for i, b in enumerate(self.R.coefficients(pair)):
                if b != 0:
                    terms.append((b / (q + 1 - i), q + 1 - i))
            out.append(terms)
        return out

    def precision(self, x: float) -> int:
        """Decimal digits that keep alpha_j(x) accurate after reduction mod 2 pi."""
        if not x > 0:
            raise DomainError(f"Straightener is defined for x > 0 only, got {x}")
        return 30 + int((self.q_param + 1) * max(0.0, -math.log10(x)))

    def angles_mp(self, point: mpmath.mpf) -> list[mpmath.mpf]:
        """Unreduced angles at the working precision of the caller."""
        return [
            mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator / point**k for c, k in terms)
            for terms in self.angle_terms()
        ]

    def angles(self, x: float) -> list[float]:
        """alpha_j(x) reduced mod 2 pi."""
        with mpmath.workdps(self.precision(x)):
            two_pi = 2 * mpmath.pi
            return [float(mpmath.fmod(a, two_pi)) for a in self.angles_mp(mpmath.mpf(x))]

    def omega(self, x: float) -> np.ndarray:
        out = np.eye(self.n)
        for pair, alpha in zip(self.R.pairs, self.angles(x)):
            c, s = math.cos(alpha), math.sin(alpha)
            i = pair.start
            out[i: i + 2, i: i + 2] = [[c, -s], [s, c]]
        return out

    def rotation_at(self, x: float) -> np.ndarray:
        """R(x) as a float matrix."""
        out = np.zeros((self.n, self.n))
        for pair in self.R.pairs:
            b = sum(float(c) * x**i for i, c in enumerate(pair.b))
            i = pair.start
            out[i + 1, i] = b
            out[i, i + 1] = -b
        return out

    def angular_speed(self, x: float) -> float:
        """max_j |alpha_j'(x)| = |b_j(x)| / x^(q+2)."""
        r = self.rotation_at(x)
        return float(np.max(np.abs(r))) / x ** (self.q_param + 2) if self.R.pairs else 0.0

    def inverse(self) -> "StraightenerEval":
        return StraightenerEval(R=self.R.negate(), q_param=self.q_param)
