"""
LinearSystem model.
A formal meromorphic system x^(p+1) y' = A(x) y.
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...series_core.models.poly_matrix import PolyMatrix
from ...shared.errors import EmptyPrecision, InsufficientPrecision


class LinearSystem(BaseModel):
    """
    System x^(p+1) y' = A(x) y of size n and Poincare rank p.

    p = -1 means the system is regular; for p >= 0 the leading matrix A(0)
    must be nonzero so that p is the actual rank.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(gt=0, description="System size")
    p: int = Field(ge=-1, description="Poincare rank")
    A: PolyMatrix = Field(description="Coefficient matrix")

    @model_validator(mode="before")
    @classmethod
    def infer_size(cls, data: Any) -> Any:
        if isinstance(data, dict) and "n" not in data and isinstance(data.get("A"), PolyMatrix):
            data = {**data, "n": data["A"].n}
        return data

    @model_validator(mode="after")
    def check_system(self) -> "LinearSystem":
        if self.A.n != self.n:
            raise ValueError(f"Matrix size {self.A.n} does not match system size {self.n}")
        if self.p >= 0 and all(c == 0 for row in self.A.at_zero() for c in row):
            raise ValueError("A singular system needs A(0) != 0; factor out the power of x first")
        return self

    @classmethod
    def from_matrix(cls, p: int, m: PolyMatrix) -> "LinearSystem":
        """
        Normalize x^(p+1) y' = M y by factoring the largest admissible power of x.

        The rank drops by ord_x(M) but never below -1.
        """
        order = m.order()
        if order is None:
            if p - (m.trunc + 1) >= -1:
                raise InsufficientPrecision(
                    f"Matrix vanishes to its truncation {m.trunc}; rank cannot be decided"
                )
            order = m.trunc + 1
        shift = min(order, p + 1)
        try:
            b = m.exact_divide(shift) if shift else m
        except EmptyPrecision as e:
            raise InsufficientPrecision(str(e)) from e
        return cls(n=m.n, p=p - shift, A=b)

    @property
    def trunc(self) -> int:
        return self.A.trunc

    @property
    def is_regular(self) -> bool:
        return self.p == -1

    def __str__(self) -> str:
        return f"x^{self.p + 1} y' = A y (n={self.n}, trunc={self.trunc})"
