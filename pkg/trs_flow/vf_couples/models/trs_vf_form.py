"""
TRSVFForm model.
A couple in TRS form of type (q, N, M):

    xi = x^e u(x, y) [x^(q+1) d/dx + ((D(x) + x^q C) y + x^(q+1+N) V(x, x^M y)) . d/dy]
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...series_core.models.block_structure import BlockStructure
from ...series_core.models.multi_series import MultiSeries
from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.services.compatible import compatible
from .vector_field_jet import VectorFieldJet


class TRSVFForm(BaseModel):
    """Exponential part D, residual part C, vestigial part V and unit u."""

    model_config = ConfigDict(frozen=True)

    e: int = Field(ge=0, description="Power of x factored out of the whole field")
    q: int = Field(ge=0, description="Poincare rank")
    N: int = Field(ge=0, description="Extra flatness of the vestigial part")
    M: int = Field(ge=0, description="Weight of y inside the vestigial part")
    bs: BlockStructure = Field(description="Block pattern of D")
    D: PolyMatrix = Field(description="Exponential part, degree <= q - 1")
    C: PolyMatrix = Field(description="Residual part, constant")
    V: tuple[MultiSeries, ...] = Field(description="Vestigial components V(x, z)")
    unit: MultiSeries = Field(description="Unit u with u(0) != 0")

    @model_validator(mode="after")
    def check_form(self) -> "TRSVFForm":
        n = self.D.n
        if self.C.n != n or self.bs.dimension != n or len(self.V) != n:
            raise ValueError("D, C, V and the block structure must share one size")
        if self.D.degree() > self.q - 1:
            raise ValueError(f"Exponential part has degree {self.D.degree()} > q - 1")
        if not self.C.is_constant():
            raise ValueError("Residual part must be constant")
        if not compatible(self.C, self.D, self.bs):
            raise ValueError("Residual part is not compatible with the exponential part")
        leading = self.C.at_zero() if self.q == 0 else self.D.at_zero()
        if all(c == 0 for row in leading for c in row):
            raise ValueError("(D + x^q C)(0) must be nonzero")
        if not self.unit.is_unit():
            raise ValueError("The factored unit must not vanish at the origin")
        return self

    @property
    def n(self) -> int:
        return self.D.n

    @property
    def unit_present(self) -> bool:
        """False when u is the constant 1."""
        return self.unit.terms != {(0,) * (self.n + 1): Fraction(1)}

    def residual(self) -> list[list[Fraction]]:
        return self.C.at_zero()

    def normalized_field(self, trunc: int) -> VectorFieldJet:
        """The bracketed field, without x^e u, known through total degree trunc."""
        n = self.n
        xi_x = MultiSeries.monomial([self.q + 1] + [0] * n, 1, n, trunc)
        ys = [MultiSeries.variable(j + 1, n, trunc) for j in range(n)]
        components = []
        for i in range(n):
            acc = MultiSeries.zero(n, trunc)
            for j in range(n):
                d = self.D.entry(i, j).coeffs[: self.q]
                c = self.C.at_zero()[i][j]
                entry = {(k,) + (0,) * n: v for k, v in enumerate(d)}
                entry[(self.q,) + (0,) * n] = entry.get((self.q,) + (0,) * n, Fraction(0)) + c
                acc = acc + MultiSeries.make(n, trunc, entry) * ys[j]
            vest = self.V[i].scale_y(self.M).shift_x(self.q + 1 + self.N)
            if vest.trunc >= trunc:
                vest = vest.truncate(trunc)
            components.append(acc + vest)
        return VectorFieldJet.make(xi_x, components)

    def to_field(self, trunc: int) -> VectorFieldJet:
        """Full field x^e u [...] as a jet."""
        eta = self.normalized_field(trunc)
        factor = self.unit.shift_x(self.e)
        return VectorFieldJet.make(eta.xi_x * factor, [c * factor for c in eta.xi_y])
