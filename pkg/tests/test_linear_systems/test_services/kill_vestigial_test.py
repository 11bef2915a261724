"""
Tests for kill_vestigial.
"""

import random
from fractions import Fraction

import pytest

from trs_flow.linear_systems.models.gauge_transform import PolyRegular
from trs_flow.linear_systems.models.trs_linear_form import TRSLinearForm
from trs_flow.linear_systems.services.apply_gauge import apply_gauge
from trs_flow.linear_systems.services.kill_vestigial import kill_vestigial
from trs_flow.linear_systems.services.recognize_trs import recognize_trs
from trs_flow.series_core.models.block_structure import BlockStructure
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.shared.errors import Obstruction


@pytest.fixture
def scalar_form() -> TRSLinearForm:
    """x^2 y' = (1 - x/2 + x^2) y."""
    return TRSLinearForm(
        q=1,
        bs=BlockStructure.model_validate({"blocks": [["real", 1]]}),
        D=PolyMatrix.constant([[1]], 0),
        C=PolyMatrix.constant([[Fraction(-1, 2)]], 0),
        V=PolyMatrix.constant([[1]], 3),
    )


def test_already_flat_form_is_unchanged(scalar_form: TRSLinearForm) -> None:
    gauge, form = kill_vestigial(scalar_form, 0)
    assert gauge.P.at_zero() == [[1]]
    assert form == scalar_form


def test_order_one_solution(scalar_form: TRSLinearForm) -> None:
    """Matching x^2 in y = (1 + p1 x) z forces p1 = 1."""
    gauge, form = kill_vestigial(scalar_form, 1)
    assert gauge.P.at_zero() == [[1]]
    assert gauge.P.coefficient(1) == [[1]]
    assert form.D == scalar_form.D
    assert form.C == scalar_form.C
    assert form.V.order() == 1
    assert form.V.coefficient(1) == [[1]]
    assert form.V.coefficient(2) == [[-1]]


def test_replaying_gauge_reproduces_form(scalar_form: TRSLinearForm) -> None:
    gauge, form = kill_vestigial(scalar_form, 3)
    replayed = recognize_trs(apply_gauge(scalar_form.to_system(), gauge))
    assert replayed is not None
    assert replayed.D == form.D
    assert replayed.C == form.C
    order = replayed.V.order()
    assert order is None or order >= 3


def test_resonant_residual_is_obstructed() -> None:
    """C = diag(0, 1) cannot absorb a coupling from the first coordinate at order 1."""
    form = TRSLinearForm(
        q=0,
        bs=BlockStructure.model_validate({"blocks": [["real", 1], ["real", 1]]}),
        D=PolyMatrix.zero(2, 0),
        C=PolyMatrix.constant([[0, 0], [0, 1]], 0),
        V=PolyMatrix.constant([[0, 0], [1, 0]], 2),
    )
    with pytest.raises(Obstruction) as excinfo:
        kill_vestigial(form, 1)
    assert excinfo.value.order == 1


def test_gauge_is_poly_regular(scalar_form: TRSLinearForm) -> None:
    gauge, _ = kill_vestigial(scalar_form, 2)
    assert isinstance(gauge, PolyRegular)


def _random_diagonal_form(rng: random.Random) -> TRSLinearForm:
    """Diagonal D with distinct eigenvalues at 0, diagonal C and a dense random V."""
    n, q = rng.choice([1, 2]), rng.choice([1, 2])
    leading = rng.sample([-3, -2, -1, 1, 2, 3], n)
    d = [[[leading[i]] + [rng.randint(-2, 2) for _ in range(q - 1)] if i == j else [0] for j in range(n)] for i in range(n)]
    c = [[Fraction(rng.randint(-4, 4), 2) if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[[rng.randint(-3, 3) for _ in range(6)] for _ in range(n)] for _ in range(n)]
    return TRSLinearForm(
        q=q,
        bs=BlockStructure.model_validate({"blocks": [["real", 1]] * n}),
        D=PolyMatrix.from_coefficients(d, q - 1),
        C=PolyMatrix.constant(c, 0),
        V=PolyMatrix.from_coefficients(v, 5),
    )


def test_random_forms_are_flattened(rng: random.Random) -> None:
    for _ in range(50):
        form = _random_diagonal_form(rng)
        order = rng.randint(1, 4)
        gauge, result = kill_vestigial(form, order)
        reached = result.V.order()
        assert reached is None or reached >= order
        assert result.D == form.D
        assert result.C == form.C

        replayed = apply_gauge(form.to_system(), gauge)
        assert replayed.p == form.q
        for k in range(form.q + 1, replayed.A.trunc + 1):
            assert replayed.A.coefficient(k) == result.V.coefficient(k - form.q - 1)
