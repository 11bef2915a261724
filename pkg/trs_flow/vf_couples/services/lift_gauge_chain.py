"""
Lift gauge chain service.
Turns linear gauge transformations into coordinate transformations of (x, y).
"""

import logging

from ...linear_systems.models.gauge_transform import DiagMonomial, GaugeTransform, PolyRegular, Ramification
from ...linear_systems.services.diagonal_steps import diagonal_steps
from ..models.coord_transform import CoordTransform, DiagMonomialCT, PolyRegularCT, RamificationCT

logger = logging.getLogger(__name__)


def _lift_step(step: tuple[int, ...]) -> list[CoordTransform]:
    n = len(step)
    chosen = [i for i in range(n) if step[i]]
    if len(chosen) == n:
        return [DiagMonomialCT(k=n)]
    order = chosen + [i for i in range(n) if not step[i]]
    inverse = [0] * n
    for a, i in enumerate(order):
        inverse[i] = a
    return [PolyRegularCT.permutation(order), DiagMonomialCT(k=len(chosen)), PolyRegularCT.permutation(inverse)]


def lift_gauge_chain(chain: list[GaugeTransform]) -> list[CoordTransform]:
    """
    Lift each gauge to the (x, y) transformation inducing it.

    Regular gauges y = P z become y = P(x) y~, ramifications stay
    ramifications, and a diagonal monomial gauge becomes its elementary 0/1
    steps, each a blow-up of a coordinate subset conjugated by permutations.
    """
    lifted: list[CoordTransform] = []
    for gauge in chain:
        if isinstance(gauge, PolyRegular):
            lifted.append(PolyRegularCT(P=gauge.P))
        elif isinstance(gauge, Ramification):
            lifted.append(RamificationCT(r=gauge.r))
        elif isinstance(gauge, DiagMonomial):
            for step in diagonal_steps(gauge.exponents):
                lifted.extend(_lift_step(step))
        else:
            raise TypeError(f"Unknown gauge {type(gauge).__name__}")
    logger.debug(f"Lifted {len(chain)} gauges to {len(lifted)} coordinate transformations")
    return lifted
