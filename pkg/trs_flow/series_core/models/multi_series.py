"""
MultiSeries model.
Power series in (x, y_1..y_n) with exact coefficients and total-degree truncation.
"""

from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from ...shared.errors import EmptyPrecision, InsufficientPrecision, NotDivisible, UnitRequired
from ...shared.rational import format_rational, to_fraction
from .truncated_series import TruncatedSeries


Alpha = tuple[int, ...]


class MultiSeries(BaseModel):
    """
    Series sum_alpha c_alpha x^alpha0 y_1^alpha1 ... y_n^alphan.

    Index 0 of a multi-index is the x exponent. Terms of total degree above
    trunc are unknown; absent keys of degree <= trunc are known zeros.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=0, description="Number of y variables")
    trunc: int = Field(ge=0, description="Known through total degree trunc")
    terms: dict[Alpha, Fraction] = Field(default_factory=dict, description="Nonzero coefficients by multi-index")

    @field_validator("terms", mode="before")
    @classmethod
    def parse_terms(cls, v: Any) -> dict[Alpha, Fraction]:
        """Accept a mapping or the JSON list of {"alpha": [...], "c": "p/q"} records."""
        if isinstance(v, dict):
            items: Iterable[tuple[Any, Any]] = v.items()
        elif isinstance(v, list):
            items = [(record["alpha"], record["c"]) for record in v]
        else:
            raise ValueError("Terms must be a mapping or a list of {alpha, c} records")
        parsed: dict[Alpha, Fraction] = {}
        for alpha, c in items:
            key = tuple(int(a) for a in alpha)
            value = to_fraction(c)
            if value != 0:
                parsed[key] = parsed.get(key, Fraction(0)) + value
        return {k: c for k, c in parsed.items() if c != 0}

    @model_validator(mode="after")
    def check_terms(self) -> "MultiSeries":
        for alpha in self.terms:
            if len(alpha) != self.n + 1:
                raise ValueError(f"Multi-index {alpha} has length {len(alpha)}, expected {self.n + 1}")
            if any(a < 0 for a in alpha):
                raise ValueError(f"Multi-index {alpha} has a negative exponent")
            if sum(alpha) > self.trunc:
                raise ValueError(f"Multi-index {alpha} exceeds truncation {self.trunc}")
        return self

    @field_serializer("terms")
    def dump_terms(self, v: dict[Alpha, Fraction]) -> list[dict[str, Any]]:
        return [{"alpha": list(alpha), "c": format_rational(c)} for alpha, c in sorted(v.items())]

    # Construction

    @classmethod
    def make(cls, n: int, trunc: int, terms: dict[Alpha, Fraction]) -> "MultiSeries":
        """Unchecked constructor; drops zeros and terms beyond trunc."""
        if trunc < 0:
            raise EmptyPrecision(f"Truncation order {trunc} leaves no known coefficient")
        kept = {a: c for a, c in terms.items() if c != 0 and sum(a) <= trunc}
        return cls.model_construct(n=n, trunc=trunc, terms=kept)

    @classmethod
    def zero(cls, n: int, trunc: int) -> "MultiSeries":
        return cls.make(n, trunc, {})

    @classmethod
    def constant(cls, c: Union[int, Fraction], n: int, trunc: int) -> "MultiSeries":
        return cls.make(n, trunc, {(0,) * (n + 1): Fraction(c)})

    @classmethod
    def monomial(cls, alpha: Sequence[int], c: Union[int, Fraction], n: int, trunc: int) -> "MultiSeries":
        return cls.make(n, trunc, {tuple(alpha): Fraction(c)})

    @classmethod
    def variable(cls, i: int, n: int, trunc: int) -> "MultiSeries":
        """The coordinate function: i = 0 is x, i >= 1 is y_i."""
        alpha = [0] * (n + 1)
        alpha[i] = 1
        return cls.make(n, trunc, {tuple(alpha): Fraction(1)})

    @classmethod
    def from_x_series(cls, f: TruncatedSeries, n: int) -> "MultiSeries":
        """Embed a series in x alone."""
        return cls.make(n, f.trunc, {(k,) + (0,) * n: c for k, c in enumerate(f.coeffs) if c != 0})

    # Inspection

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        key = tuple(alpha)
        if sum(key) > self.trunc:
            raise InsufficientPrecision(f"Coefficient {key} unknown beyond truncation {self.trunc}")
        return self.terms.get(key, Fraction(0))

    def order(self) -> Optional[int]:
        """Lowest total degree of a nonzero term, None for a known-zero series."""
        return min((sum(a) for a in self.terms), default=None)

    def valuation_bound(self) -> int:
        v = self.order()
        return self.trunc + 1 if v is None else v

    def x_order(self) -> Optional[int]:
        """Largest e such that x^e divides every known term."""
        return min((a[0] for a in self.terms), default=None)

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        return self.terms.get((0,) * (self.n + 1), Fraction(0)) != 0

    # Arithmetic

    def __add__(self, other: Union["MultiSeries", int, Fraction]) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            other = MultiSeries.constant(other, self.n, self.trunc)
        k = min(self.trunc, other.trunc)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, Fraction(0)) + c
        return MultiSeries.make(self.n, k, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiSeries":
        return MultiSeries.make(self.n, self.trunc, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other: Union["MultiSeries", int, Fraction]) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            other = MultiSeries.constant(other, self.n, self.trunc)
        return self + (-other)

    def __mul__(self, other: Union["MultiSeries", int, Fraction]) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        k = min(self.trunc + other.valuation_bound(), other.trunc + self.valuation_bound())
        return self._product(other, k)

    __rmul__ = __mul__

    def _product(self, other: "MultiSeries", k: int) -> "MultiSeries":
        out: dict[Alpha, Fraction] = {}
        right = [(a, sum(a), c) for a, c in other.terms.items()]
        for a, c in self.terms.items():
            da = sum(a)
            for b, db, d in right:
                if da + db > k:
                    continue
                key = tuple(i + j for i, j in zip(a, b))
                out[key] = out.get(key, Fraction(0)) + c * d
        return MultiSeries.make(self.n, k, out)

    def scale(self, c: Union[int, Fraction]) -> "MultiSeries":
        c = Fraction(c)
        return MultiSeries.make(self.n, self.trunc, {a: c * v for a, v in self.terms.items()})

    def power(self, e: int) -> "MultiSeries":
        result = MultiSeries.constant(1, self.n, self.trunc)
        for _ in range(e):
            result = result * self
        return result

    def partial(self, i: int) -> "MultiSeries":
        """Partial derivative in x (i = 0) or y_i (i >= 1)."""
        if self.trunc == 0:
            raise EmptyPrecision("Derivative of a series known only to its constant term")
        out: dict[Alpha, Fraction] = {}
        for a, c in self.terms.items():
            if a[i] == 0:
                continue
            key = a[:i] + (a[i] - 1,) + a[i + 1:]
            out[key] = c * a[i]
        return MultiSeries.make(self.n, self.trunc - 1, out)

    def reciprocal(self) -> "MultiSeries":
        """Inverse of a unit by the geometric series in its non-constant part."""
        if not self.is_unit():
            raise UnitRequired("Reciprocal requires a nonzero constant term")
        c0 = self.terms[(0,) * (self.n + 1)]
        rest = (self - MultiSeries.constant(c0, self.n, self.trunc)).scale(1 / c0)
        result = MultiSeries.constant(1, self.n, self.trunc)
        term = MultiSeries.constant(1, self.n, self.trunc)
        for _ in range(self.trunc):
            term = -(term * rest)
            if term.is_zero():
                break
            result = result + term
        return result.scale(1 / c0)

    def exact_divide(self, k: int) -> "MultiSeries":
        """Quotient g with self = x^k * g."""
        if k == 0:
            return self
        for a, c in self.terms.items():
            if a[0] < k:
                raise NotDivisible(f"Term {a} with coefficient {format_rational(c)} is not divisible by x^{k}")
        if self.trunc - k < 0:
            raise EmptyPrecision(f"Dividing by x^{k} leaves no known coefficient")
        return MultiSeries.make(self.n, self.trunc - k, {(a[0] - k,) + a[1:]: c for a, c in self.terms.items()})

    def shift_x(self, k: int) -> "MultiSeries":
        """Multiply by x^k."""
        return MultiSeries.make(self.n, self.trunc + k, {(a[0] + k,) + a[1:]: c for a, c in self.terms.items()})

    def truncate(self, k: int) -> "MultiSeries":
        if k > self.trunc:
            raise InsufficientPrecision(f"Cannot extend truncation {self.trunc} to {k}")
        return MultiSeries.make(self.n, k, dict(self.terms))

    def jet(self, k: int) -> "MultiSeries":
        """Terms of total degree <= k, precision kept (j_k is a polynomial)."""
        return MultiSeries.make(self.n, self.trunc, {a: c for a, c in self.terms.items() if sum(a) <= k})

    def substitute(self, x_image: "MultiSeries", y_images: Sequence["MultiSeries"]) -> "MultiSeries":
        """
        Compose with (x, y) -> (x_image, y_images).

        Images must have zero constant term; their variable count sets the
        output's. Total degree never drops, so the output is known through
        min(trunc, image truncations).
        """
        if len(y_images) != self.n:
            raise ValueError(f"Expected {self.n} y-images, got {len(y_images)}")
        images = [x_image, *y_images]
        m = x_image.n
        for img in images:
            if img.n != m:
                raise ValueError("All images must live in the same variables")
            if img.is_unit():
                raise ValueError("Substitution images must have zero constant term")
        k = min([self.trunc] + [img.trunc for img in images])
        images = [img.truncate(k) for img in images]
        cache: dict[tuple[int, int], MultiSeries] = {}

        def power(i: int, e: int) -> MultiSeries:
            if (i, e) not in cache:
                cache[(i, e)] = MultiSeries.constant(1, m, k) if e == 0 else power(i, e - 1)._product(images[i], k)
            return cache[(i, e)]

        out: dict[Alpha, Fraction] = {}
        for a, c in self.terms.items():
            term = MultiSeries.constant(c, m, k)
            for i, e in enumerate(a):
                if e:
                    term = term._product(power(i, e), k)
            for b, d in term.terms.items():
                out[b] = out.get(b, Fraction(0)) + d
        return MultiSeries.make(m, k, out)

    def at_curve(self, gamma: Sequence[TruncatedSeries]) -> TruncatedSeries:
        """Substitute y = gamma(x); every component must vanish at 0."""
        if len(gamma) != self.n:
            raise ValueError(f"Expected {self.n} curve components, got {len(gamma)}")
        for g in gamma:
            if g.coeffs[0] != 0:
                raise ValueError("Curve components must have zero constant term")
        k = min([self.trunc] + [g.trunc for g in gamma])
        comps = [TruncatedSeries.make(g.coeffs[: k + 1], k) for g in gamma]
        powers: dict[tuple[int, int], TruncatedSeries] = {}

        def power(i: int, e: int) -> TruncatedSeries:
            if (i, e) not in powers:
                if e == 0:
                    powers[(i, e)] = TruncatedSeries.constant(1, k)
                else:
                    p = power(i, e - 1) * comps[i]
                    powers[(i, e)] = TruncatedSeries.make(p.coeffs[: k + 1], k)
            return powers[(i, e)]

        acc = [Fraction(0)] * (k + 1)
        for a, c in self.terms.items():
            if a[0] > k:
                continue
            term = TruncatedSeries.monomial(a[0], c, k)
            for i, e in enumerate(a[1:]):
                if e:
                    term = term * power(i, e)
                    term = TruncatedSeries.make(term.coeffs[: k + 1], k)
            for j in range(k + 1):
                acc[j] += term.coeffs[j]
        return TruncatedSeries.make(acc, k)

    def y_slice(self) -> TruncatedSeries:
        """The restriction y = 0 as a series in x."""
        coeffs = [Fraction(0)] * (self.trunc + 1)
        for a, c in self.terms.items():
            if not any(a[1:]):
                coeffs[a[0]] = c
        return TruncatedSeries.make(coeffs, self.trunc)

    def linear_part(self) -> list[TruncatedSeries]:
        """Coefficients of y_1..y_n as series in x (known through trunc - 1)."""
        if self.trunc == 0:
            raise EmptyPrecision("Linear part needs truncation >= 1")
        rows = [[Fraction(0)] * self.trunc for _ in range(self.n)]
        for a, c in self.terms.items():
            ys = a[1:]
            if sum(ys) == 1:
                rows[ys.index(1)][a[0]] = c
        return [TruncatedSeries.make(r, self.trunc - 1) for r in rows]

    def scale_y(self, m: int) -> "MultiSeries":
        """Substitute y -> x^m y (precision kept, degrees only grow)."""
        out = {(a[0] + m * sum(a[1:]),) + a[1:]: c for a, c in self.terms.items()}
        return MultiSeries.make(self.n, self.trunc, out)

    def numeric(self) -> Callable[[float, np.ndarray], float]:
        """Float evaluator of the known polynomial part."""
        if not self.terms:
            return lambda x, y: 0.0
        exps = np.array(list(self.terms.keys()), dtype=float)
        coefs = np.array([float(c) for c in self.terms.values()])

        def evaluate(x: float, y: np.ndarray) -> float:
            point = np.concatenate(([x], np.asarray(y, dtype=float)))
            return float(coefs @ np.prod(np.power(point, exps), axis=1))

        return evaluate

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.n == other.n and self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.trunc, tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        parts = [f"{format_rational(c)}*{list(a)}" for a, c in sorted(self.terms.items())]
        return (" + ".join(parts) or "0") + f" + O(|.|^{self.trunc + 1})"
