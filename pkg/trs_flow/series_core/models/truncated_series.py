"""
TruncatedSeries model.
A power series in x with exact rational coefficients known through degree K.
"""

from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from ...shared.errors import EmptyPrecision, InsufficientPrecision, NotDivisible, UnitRequired
from ...shared.rational import format_rational, to_fraction


Scalar = Union[int, Fraction]


class TruncatedSeries(BaseModel):
    """
    Element of R[[x]] known to finite order.

    Coefficients of x^k for k > trunc are unknown, not zero. Every operation
    returns the largest truncation order it can vouch for.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coeffs: tuple[Fraction, ...] = Field(description="Coefficients, index = power of x")
    trunc: int = Field(ge=0, description="Known through x^trunc")

    @field_validator("coeffs", mode="before")
    @classmethod
    def parse_coeffs(cls, v: Any) -> tuple[Fraction, ...]:
        """Accept ints, Fractions and "p/q" strings."""
        if isinstance(v, (str, bytes)) or not isinstance(v, Iterable):
            raise ValueError("Coefficients must be a sequence")
        return tuple(to_fraction(c) for c in v)

    @model_validator(mode="after")
    def check_length(self) -> "TruncatedSeries":
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(
                f"Series with trunc {self.trunc} needs {self.trunc + 1} coefficients, got {len(self.coeffs)}"
            )
        return self

    @field_serializer("coeffs")
    def dump_coeffs(self, v: tuple[Fraction, ...]) -> list[str]:
        return [format_rational(c) for c in v]

    # Construction

    @classmethod
    def make(cls, coeffs: Sequence[Scalar], trunc: Optional[int] = None) -> "TruncatedSeries":
        """Build from leading coefficients, padding with zeros or cutting to trunc."""
        values = [Fraction(c) for c in coeffs]
        if trunc is None:
            trunc = max(len(values) - 1, 0)
        if trunc < 0:
            raise EmptyPrecision(f"Truncation order {trunc} leaves no known coefficient")
        values = (values + [Fraction(0)] * (trunc + 1))[: trunc + 1]
        return cls.model_construct(coeffs=tuple(values), trunc=trunc)

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls.make([], trunc)

    @classmethod
    def constant(cls, c: Scalar, trunc: int) -> "TruncatedSeries":
        return cls.make([c], trunc)

    @classmethod
    def monomial(cls, k: int, c: Scalar, trunc: int) -> "TruncatedSeries":
        values: list[Scalar] = [0] * (k + 1)
        values[k] = c
        return cls.make(values, trunc)

    # Inspection

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^k; beyond trunc it is unknown."""
        if k < 0:
            return Fraction(0)
        if k > self.trunc:
            raise InsufficientPrecision(f"Coefficient x^{k} unknown beyond truncation {self.trunc}")
        return self.coeffs[k]

    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None when all known ones vanish."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def valuation_bound(self) -> int:
        """Order, or trunc + 1 when the series is zero to known precision."""
        v = self.order()
        return self.trunc + 1 if v is None else v

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def degree(self) -> int:
        """Largest index with a nonzero known coefficient (-1 for zero)."""
        for k in range(self.trunc, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return -1

    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    # Arithmetic

    def __add__(self, other: Union["TruncatedSeries", int, Fraction]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.trunc)
        k = min(self.trunc, other.trunc)
        return TruncatedSeries.make([self.coeffs[i] + other.coeffs[i] for i in range(k + 1)], k)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries.make([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other: Union["TruncatedSeries", int, Fraction]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.trunc)
        return self + (-other)

    def __rsub__(self, other: Union[int, Fraction]) -> "TruncatedSeries":
        return TruncatedSeries.constant(other, self.trunc) - self

    def __mul__(self, other: Union["TruncatedSeries", int, Fraction]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(Fraction(other))
        k = min(self.trunc + other.valuation_bound(), other.trunc + self.valuation_bound())
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (k + 1)
        for i, ai in enumerate(a):
            if ai == 0 or i > k:
                continue
            for j in range(min(len(b), k - i + 1)):
                if b[j] != 0:
                    out[i + j] += ai * b[j]
        return TruncatedSeries.make(out, k)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries.make([c * a for a in self.coeffs], self.trunc)

    def derivative(self) -> "TruncatedSeries":
        if self.trunc == 0:
            raise EmptyPrecision("Derivative of a series known only to its constant term")
        return TruncatedSeries.make([k * self.coeffs[k] for k in range(1, self.trunc + 1)], self.trunc - 1)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k (k >= 0); known precision grows by k."""
        if k < 0:
            return self.exact_divide(-k)
        return TruncatedSeries.make([0] * k + list(self.coeffs), self.trunc + k)

    def exact_divide(self, k: int) -> "TruncatedSeries":
        """Quotient g with self = x^k * g."""
        if k == 0:
            return self
        if k - 1 > self.trunc:
            raise InsufficientPrecision(f"Cannot decide divisibility by x^{k} at truncation {self.trunc}")
        for i in range(k):
            if self.coeffs[i] != 0:
                raise NotDivisible(f"Coefficient of x^{i} is {format_rational(self.coeffs[i])}, not divisible by x^{k}")
        if self.trunc - k < 0:
            raise EmptyPrecision(f"Dividing by x^{k} leaves no known coefficient")
        return TruncatedSeries.make(self.coeffs[k:], self.trunc - k)

    def truncate(self, k: int) -> "TruncatedSeries":
        """Forget coefficients beyond x^k."""
        if k > self.trunc:
            raise InsufficientPrecision(f"Cannot extend truncation {self.trunc} to {k}")
        return TruncatedSeries.make(self.coeffs[: k + 1], k)

    def jet(self, k: int) -> "TruncatedSeries":
        """The jet j_k: coefficients beyond k set to zero, precision kept."""
        return TruncatedSeries.make(list(self.coeffs[: k + 1]), self.trunc)

    def reciprocal(self) -> "TruncatedSeries":
        if not self.is_unit():
            raise UnitRequired("Reciprocal requires a nonzero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for k in range(1, self.trunc + 1):
            acc = sum((self.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
            out.append(-acc * inv0)
        return TruncatedSeries.make(out, self.trunc)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)) for an inner series with zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("Composition requires an inner series with zero constant term")
        v = inner.order()
        if v is None:
            return TruncatedSeries.constant(self.coeffs[0], inner.trunc)
        k = (self.trunc + 1) * v - 1
        first = next((j for j in range(1, self.trunc + 1) if self.coeffs[j] != 0), None)
        if first is not None:
            k = min(k, inner.trunc + (first - 1) * v)
        inner_k = TruncatedSeries.make(inner.coeffs[: k + 1], k) if inner.trunc >= k else inner
        out = TruncatedSeries.constant(self.coeffs[0], k)
        power = TruncatedSeries.constant(1, k)
        for j in range(1, min(self.trunc, k // v) + 1):
            power = (power * inner_k)
            power = TruncatedSeries.make(power.coeffs[: k + 1], k)
            if self.coeffs[j] != 0:
                out = out + power.scale(self.coeffs[j])
        return TruncatedSeries.make(out.coeffs, k)

    def ramify(self, r: int) -> "TruncatedSeries":
        """Substitute x -> x^r; coefficients between multiples of r are known zeros."""
        k = r * (self.trunc + 1) - 1
        out = [Fraction(0)] * (k + 1)
        for i, c in enumerate(self.coeffs):
            out[r * i] = c
        return TruncatedSeries.make(out, k)

    def evaluate(self, x: float) -> float:
        """Float evaluation of the known polynomial part (Horner)."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.trunc))

    def __str__(self) -> str:
        terms = [f"{format_rational(c)}*x^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return (" + ".join(terms) or "0") + f" + O(x^{self.trunc + 1})"
