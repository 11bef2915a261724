"""
TRSLinearForm model.
A linear system recognized in Turrittin-Ramis-Sibuya form of rank q.
"""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...series_core.models.block_structure import BlockStructure
from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.services.compatible import compatible
from .linear_system import LinearSystem


class TRSLinearForm(BaseModel):
    """
    x^(q+1) y' = (D(x) + x^q C + x^(q+1) V(x)) y.

    D has degree <= q - 1 and the block pattern bs, C is constant and
    compatible with D, and (D + x^q C)(0) != 0.
    """

    model_config = ConfigDict(frozen=True)

    q: int = Field(ge=0, description="Poincare rank")
    bs: BlockStructure = Field(description="Block pattern of D")
    D: PolyMatrix = Field(description="Exponential part, polynomial of degree <= q - 1")
    C: PolyMatrix = Field(description="Residual part, constant")
    V: PolyMatrix = Field(description="Vestigial part")
    permutation: tuple[int, ...] = Field(default=(), description="Original index of each coordinate")

    @model_validator(mode="after")
    def check_form(self) -> "TRSLinearForm":
        n = self.D.n
        if self.C.n != n or self.V.n != n or self.bs.dimension != n:
            raise ValueError("D, C, V and the block structure must share one size")
        if self.D.degree() > self.q - 1:
            raise ValueError(f"Exponential part has degree {self.D.degree()} > q - 1 = {self.q - 1}")
        if not self.C.is_constant():
            raise ValueError("Residual part must be constant")
        if not compatible(self.C, self.D, self.bs):
            raise ValueError("Residual part is not compatible with the exponential part")
        leading = self.C.at_zero() if self.q == 0 else self.D.at_zero()
        if all(c == 0 for row in leading for c in row):
            raise ValueError("(D + x^q C)(0) must be nonzero")
        if self.permutation and sorted(self.permutation) != list(range(n)):
            raise ValueError("Permutation must list every coordinate once")
        return self

    @property
    def n(self) -> int:
        return self.D.n

    def residual(self) -> list[list[Fraction]]:
        return self.C.at_zero()

    def principal(self, trunc: int) -> PolyMatrix:
        """D + x^q C at the requested truncation."""
        d = PolyMatrix.from_coefficients(
            [[e.coeffs[: self.q] for e in row] for row in self.D.entries], trunc
        ) if self.q > 0 else PolyMatrix.zero(self.n, trunc)
        c = PolyMatrix.constant(self.C.at_zero(), trunc).shift(self.q).truncate(trunc)
        return d + c

    def to_system(self) -> LinearSystem:
        trunc = self.V.trunc + self.q + 1
        return LinearSystem(n=self.n, p=self.q, A=self.principal(trunc) + self.V.shift(self.q + 1))

    def vestigial_order(self) -> Optional[int]:
        return self.V.order()
