"""
Spectrum service.
Eigenvalues of a constant rational matrix from its characteristic
polynomial factored over Q.
"""

import logging
from fractions import Fraction
from typing import Optional, Union

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict

from ...series_core.models.poly_matrix import ConstMatrix, PolyMatrix
from ...series_core.services.linear_algebra import LAMBDA, charpoly_factors
from ...shared.errors import Undecidable
from ..models.spectrum import Eigenvalue, Spectrum

logger = logging.getLogger(__name__)


class SpectralValue(BaseModel):
    """An eigenvalue as a sympy number when exact, a complex float otherwise."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    exact: Optional[sympy.Expr] = None
    approx: complex
    multiplicity: int
    factor: tuple[Fraction, ...]


def constant_rows(c: Union[PolyMatrix, ConstMatrix]) -> ConstMatrix:
    if isinstance(c, PolyMatrix):
        if not c.is_constant():
            raise ValueError("Spectrum is defined for constant matrices only")
        return c.at_zero()
    return [[Fraction(x) for x in row] for row in c]


def spectral_values(c: Union[PolyMatrix, ConstMatrix]) -> list[SpectralValue]:
    """
    Roots of every rational factor of the characteristic polynomial.

    Factors of degree <= 2 are solved exactly; higher ones with numpy.roots.
    """
    rows = constant_rows(c)
    values: list[SpectralValue] = []
    for coeffs, mult in charpoly_factors(rows):
        factor = tuple(coeffs)
        if len(coeffs) <= 3:
            poly = sympy.Poly([sympy.Rational(f.numerator, f.denominator) for f in coeffs], LAMBDA)
            for root in sympy.roots(poly, LAMBDA).keys():
                values.append(SpectralValue(exact=root, approx=complex(sympy.N(root, 30)), multiplicity=mult, factor=factor))
        else:
            logger.warning(f"Irreducible factor of degree {len(coeffs) - 1}; eigenvalues solved in floats")
            for root in np.roots([float(f) for f in coeffs]):
                values.append(SpectralValue(approx=complex(root), multiplicity=mult, factor=factor))
    return values


def compute_spectrum(c: Union[PolyMatrix, ConstMatrix]) -> Spectrum:
    """
    Eigenvalues of a constant matrix with multiplicities.

    Returns:
        Spectrum whose exact flag is False when a factor of degree > 2 was
        solved numerically
    """
    values = spectral_values(c)
    eigenvalues = tuple(
        Eigenvalue(
            real=v.approx.real,
            imag=v.approx.imag,
            multiplicity=v.multiplicity,
            exact=None if v.exact is None else str(v.exact),
            factor=v.factor,
        )
        for v in values
    )
    return Spectrum(eigenvalues=eigenvalues, exact=all(v.exact is not None for v in values))


def integer_gap(a: SpectralValue, b: SpectralValue, cluster_tol: float) -> Optional[int]:
    """
    a - b when it is an integer, None otherwise.

    Raises:
        Undecidable: a float difference lies within cluster_tol of a nonzero integer
    """
    if a.exact is not None and b.exact is not None:
        diff = sympy.expand(a.exact - b.exact)
        return int(diff) if diff.is_Integer else None
    diff = a.approx - b.approx
    nearest = round(diff.real)
    if abs(diff - nearest) < cluster_tol:
        if nearest != 0:
            raise Undecidable(f"Eigenvalue difference {diff:.3g} is within {cluster_tol:g} of the integer {nearest}")
        return 0
    return None
