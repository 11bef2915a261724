"""
Tests for jet determinacy: terms of the field beyond h(s) never reach the s-jet
of the transformed field.
"""

import random
from fractions import Fraction

from trs_flow.series_core.models.multi_series import MultiSeries
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.vf_couples.models.coord_transform import DiagMonomialCT, PolyRegularCT, RamificationCT
from trs_flow.vf_couples.models.formal_curve import FormalCurve
from trs_flow.vf_couples.models.invariant_couple import InvariantCouple
from trs_flow.vf_couples.models.transform_chain import TransformChain
from trs_flow.vf_couples.models.vector_field_jet import VectorFieldJet
from trs_flow.vf_couples.services.determinacy_shift import determinacy_shift
from trs_flow.vf_couples.services.reduce_vf_trs import reduce_vf_trs


def _random_terms(rng: random.Random, n: int, low: int, high: int) -> MultiSeries:
    """A few monomials of total degree in [low, high] with small nonzero coefficients."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(4):
        degree = rng.randint(low, high)
        cuts = sorted(rng.randint(0, degree) for _ in range(n))
        alpha = tuple(b - a for a, b in zip([0] + cuts, cuts + [degree]))
        terms[alpha] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    return MultiSeries.make(n, high, terms)


def _perturbed(couple: InvariantCouple, rng: random.Random, low: int) -> InvariantCouple:
    vf, n, k = couple.vf, couple.n, couple.vf.trunc
    components = [c + _random_terms(rng, n, low, k) for c in vf.components()]
    return InvariantCouple(vf=VectorFieldJet.make(components[0], components[1:]), curve=couple.curve)


def _jets(couple: InvariantCouple, s: int) -> list[MultiSeries]:
    return [c.jet(s) for c in couple.vf.components()]


def test_euler_chain_ignores_high_order_terms(euler_couple: InvariantCouple, rng: random.Random) -> None:
    chain = reduce_vf_trs(euler_couple).chain
    s = 4
    h = determinacy_shift(chain, s)
    assert h == s + 2
    expected = _jets(chain.replay(euler_couple), s)
    for _ in range(10):
        assert _jets(chain.replay(_perturbed(euler_couple, rng, h + 1)), s) == expected


def test_ramified_chain_ignores_high_order_terms(rng: random.Random) -> None:
    """x^2 d/dx + y1 d/dy1 - y2 d/dy2 through a shear, two blow-ups and x = z^2."""
    k = 10
    vf = VectorFieldJet.make(
        MultiSeries.monomial([2, 0, 0], 1, 2, k),
        [MultiSeries.variable(1, 2, k), -MultiSeries.variable(2, 2, k)],
    )
    couple = InvariantCouple(vf=vf, curve=FormalCurve.zero(2, k - 1))
    chain = TransformChain(
        steps=[
            PolyRegularCT(P=PolyMatrix.constant([[1, 1], [0, 1]], 0)),
            DiagMonomialCT(k=2),
            RamificationCT(r=2),
            DiagMonomialCT(k=2),
        ]
    )
    s = 3
    h = determinacy_shift(chain, s)
    assert h == s + 2
    expected = _jets(chain.replay(couple), s)
    for _ in range(10):
        assert _jets(chain.replay(_perturbed(couple, rng, h + 1)), s) == expected
