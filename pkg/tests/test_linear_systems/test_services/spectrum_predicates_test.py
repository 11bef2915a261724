"""
Tests for the spectral predicates: good spectrum, spectrum, dominant rotation
and unstability index.
"""

from fractions import Fraction

import pytest

from trs_flow.linear_systems.services.compute_spectrum import compute_spectrum
from trs_flow.linear_systems.services.has_good_spectrum import has_good_spectrum
from trs_flow.linear_systems.services.no_dominant_rotation import no_dominant_rotation
from trs_flow.linear_systems.services.unstability_index import unstability_index
from trs_flow.series_core.models.block_structure import BlockStructure
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.shared.errors import Undecidable


def blocks(*spec: tuple[str, int]) -> BlockStructure:
    return BlockStructure.model_validate({"blocks": [list(b) for b in spec]})


def test_good_spectrum_cases() -> None:
    half = Fraction(-1, 2)
    assert has_good_spectrum(PolyMatrix.constant([[half, 0], [0, half]], 0), cluster_tol=1e-9)
    assert not has_good_spectrum(PolyMatrix.constant([[0, 0], [0, 1]], 0), cluster_tol=1e-9)
    assert has_good_spectrum([[Fraction(-1), Fraction(-1)], [Fraction(1), Fraction(-1)]], cluster_tol=1e-9)


def test_good_spectrum_with_irrational_pair() -> None:
    """sqrt(2) and -sqrt(2) differ by an irrational amount."""
    assert has_good_spectrum([[Fraction(0), Fraction(2)], [Fraction(1), Fraction(0)]], cluster_tol=1e-9)


def test_spectrum_of_rotation() -> None:
    spectrum = compute_spectrum([[Fraction(-1), Fraction(-1)], [Fraction(1), Fraction(-1)]])
    assert spectrum.exact
    assert spectrum.dimension == 2
    assert sorted(e.imag for e in spectrum.eigenvalues) == pytest.approx([-1.0, 1.0])
    assert spectrum.max_real_part() == pytest.approx(-1.0)


def test_spectrum_rejects_non_constant() -> None:
    with pytest.raises(ValueError):
        compute_spectrum(PolyMatrix.from_coefficients([[[1, 1]]], 1))


def test_no_dominant_rotation() -> None:
    real = PolyMatrix.constant([[1, 0], [0, -1]], 0)
    assert no_dominant_rotation(real, blocks(("real", 1), ("real", 1)))
    # c = i + x
    dominant = PolyMatrix.from_coefficients([[[0, 1], [-1]], [[1], [0, 1]]], 1)
    assert not no_dominant_rotation(dominant, blocks(("complex", 1)))
    # c = 1 + i x
    damped = PolyMatrix.from_coefficients([[[1], [0, -1]], [[0, 1], [1]]], 1)
    assert no_dominant_rotation(damped, blocks(("complex", 1)))


def test_unstability_index() -> None:
    assert unstability_index(PolyMatrix.constant([[1, 0], [0, -1]], 0), blocks(("real", 1), ("real", 1))) == 1
    # Theta(x + i) + (-x)
    mixed = PolyMatrix.from_coefficients(
        [[[0, 1], [-1], [0]], [[1], [0, 1], [0]], [[0], [0], [0, -1]]], 1
    )
    assert unstability_index(mixed, blocks(("complex", 1), ("real", 1))) == 2
    stable = PolyMatrix.constant([[-1, 0, 0], [0, -2, 0], [0, 0, -3]], 0)
    assert unstability_index(stable, blocks(("real", 1), ("real", 1), ("real", 1))) == 0


def test_unstability_index_undecidable_for_vanishing_entry() -> None:
    with pytest.raises(Undecidable):
        unstability_index(PolyMatrix.constant([[0, 0], [0, 1]], 1), blocks(("real", 1), ("real", 1)))
