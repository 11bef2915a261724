"""
ComplexSeries model.
A complex power series stored as real and imaginary TruncatedSeries.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .truncated_series import TruncatedSeries


class ComplexSeries(BaseModel):
    """c(x) = re(x) + i*im(x) with a common truncation order."""

    model_config = ConfigDict(frozen=True)

    re: TruncatedSeries = Field(description="Real part")
    im: TruncatedSeries = Field(description="Imaginary part")

    @model_validator(mode="after")
    def check_trunc(self) -> "ComplexSeries":
        if self.re.trunc != self.im.trunc:
            raise ValueError(f"Real and imaginary parts disagree on truncation ({self.re.trunc} vs {self.im.trunc})")
        return self

    @classmethod
    def make(cls, re: TruncatedSeries, im: TruncatedSeries) -> "ComplexSeries":
        k = min(re.trunc, im.trunc)
        return cls(re=re.truncate(k), im=im.truncate(k))

    @property
    def trunc(self) -> int:
        return self.re.trunc

    def is_real(self) -> bool:
        return self.im.is_zero()

    def order(self) -> Optional[int]:
        orders = [v for v in (self.re.order(), self.im.order()) if v is not None]
        return min(orders) if orders else None

    def __add__(self, other: "ComplexSeries") -> "ComplexSeries":
        return ComplexSeries.make(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexSeries") -> "ComplexSeries":
        return ComplexSeries.make(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexSeries") -> "ComplexSeries":
        return ComplexSeries.make(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def conjugate(self) -> "ComplexSeries":
        return ComplexSeries(re=self.re, im=-self.im)

    def __str__(self) -> str:
        return f"({self.re}) + i({self.im})"
