"""
FieldEvaluator model.
Numeric face of a field x^(q+1) d/dx + F(x, y) . d/dy: the slope dy/dx = F / x^(q+1).
"""

from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ...straightener.models.straightened_field import StraightenedField
from ...vf_couples.models.trs_vf_form import TRSVFForm
from ...vf_couples.models.vector_field_jet import VectorFieldJet

Slope = Callable[[float, np.ndarray], np.ndarray]
LinearPart = Callable[[float], np.ndarray]


class FieldEvaluator(BaseModel):
    """
    dy/dx on 0 < x <= x_max, with an optional linear part L(x).

    When present, L satisfies slope(x, y) = L(x) y + r(x, y) with r free of
    terms linear in y along y = 0; it lets offsets be propagated exactly.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(gt=0, description="Number of y variables")
    q: int = Field(ge=-1, description="x-component is x^(q+1) after normalization")
    x_max: float = Field(default=1.0, gt=0, description="Right end of the evaluation domain")
    bound: float = Field(default=1e3, gt=0, description="Escape threshold on ||y||")
    label: str = Field(default="field", description="Name carried into reports")
    slope: Slope = Field(description="dy/dx as a function of (x, y)")
    linear: Optional[LinearPart] = Field(default=None, description="L(x), when the linear part is known")

    @classmethod
    def from_trs_form(cls, form: TRSVFForm, x_max: float = 1.0, bound: float = 1e3) -> "FieldEvaluator":
        """dy/dx = (D(x) + x^q C) y / x^(q+1) + x^N V(x, x^M y); the factor x^e u is dropped."""
        n, q, m, flat = form.n, form.q, form.M, form.N
        entries = [[form.D.entry(i, j) for j in range(n)] for i in range(n)]
        c = np.array([[float(v) for v in row] for row in form.C.at_zero()])
        vestigial = [comp.numeric() for comp in form.V]

        def linear(x: float) -> np.ndarray:
            d = np.array([[e.evaluate(x) for e in row] for row in entries])
            return (d + x**q * c) / x ** (q + 1)

        def slope(x: float, y: np.ndarray) -> np.ndarray:
            y = np.asarray(y, dtype=float)
            z = x**m * y
            return linear(x) @ y + x**flat * np.array([f(x, z) for f in vestigial])

        return cls(n=n, q=q, x_max=x_max, bound=bound, label="trs_form", slope=slope, linear=linear)

    @classmethod
    def from_vector_field(cls, vf: VectorFieldJet, x_max: float = 1.0, bound: float = 1e3) -> "FieldEvaluator":
        """dy/dx = xi_y / xi_x from the polynomial jet."""
        evaluate = vf.numeric()
        x_only = all(not any(a[1:]) for a in vf.xi_x.terms)
        order = vf.xi_x.x_order()
        q = order - 1 if order is not None else -1

        def slope(x: float, y: np.ndarray) -> np.ndarray:
            values = evaluate(x, y)
            return values[1:] / values[0]

        linear: Optional[LinearPart] = None
        if x_only:
            rows = [c.linear_part() for c in vf.xi_y]
            xi_x = vf.xi_x.numeric()

            def linear_part(x: float) -> np.ndarray:
                return np.array([[e.evaluate(x) for e in row] for row in rows]) / xi_x(x, np.zeros(vf.n))

            linear = linear_part

        return cls(n=vf.n, q=q, x_max=x_max, bound=bound, label="vector_field", slope=slope, linear=linear)

    @classmethod
    def from_straightened(cls, field: StraightenedField, x_max: float = 1.0, bound: float = 1e3) -> "FieldEvaluator":
        """dz/dx of the straightened field (divided by x^s, same trajectories)."""
        evaluate = field.evaluator()
        n, q = field.n, field.reduced_q
        entries = [[field.reduced_D.entry(i, j) for j in range(n)] for i in range(n)]
        c = np.array([[float(v) for v in row] for row in field.form.C.at_zero()])

        def slope(x: float, z: np.ndarray) -> np.ndarray:
            values = evaluate(x, z)
            return values[1:] / values[0]

        def linear(x: float) -> np.ndarray:
            d = np.array([[e.evaluate(x) for e in row] for row in entries])
            return (d + x**q * c) / x ** (q + 1)

        return cls(n=n, q=q, x_max=x_max, bound=bound, label="straightened", slope=slope, linear=linear)

    @classmethod
    def from_field(cls, field: Callable[[float, np.ndarray], np.ndarray], n: int, q: int, **kwargs: float) -> "FieldEvaluator":
        """Wrap a full field (x, y) -> (xi_x, xi_y)."""

        def slope(x: float, y: np.ndarray) -> np.ndarray:
            values = field(x, y)
            return values[1:] / values[0]

        return cls(n=n, q=q, slope=slope, label="field", **kwargs)

    def jacobian(self, x: float, y: np.ndarray) -> np.ndarray:
        """d slope / dy, exact linear part when known at y = 0, else central differences."""
        y = np.asarray(y, dtype=float)
        if self.linear is not None and not np.any(y):
            return self.linear(x)
        out = np.empty((self.n, self.n))
        for j in range(self.n):
            h = 1e-7 * max(1.0, abs(y[j]))
            e = np.zeros(self.n)
            e[j] = h
            out[:, j] = (self.slope(x, y + e) - self.slope(x, y - e)) / (2 * h)
        return out

    def remainder(self, x: float, y: np.ndarray) -> np.ndarray:
        """slope - L y; requires the linear part."""
        if self.linear is None:
            raise ValueError(f"Field {self.label} has no known linear part")
        return self.slope(x, y) - self.linear(x) @ np.asarray(y, dtype=float)
