"""
Reduction state.
The current system, the gauges applied so far and the partition of the
coordinates into segments that no later step couples again.
"""

import logging
from fractions import Fraction
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ....series_core.models.poly_matrix import ConstMatrix, PolyMatrix
from ....series_core.services.linear_algebra import identity, is_zero_matrix
from ....shared.errors import Inadmissible
from ...models.gauge_transform import DiagMonomial, GaugeTransform, PolyRegular
from ...models.linear_system import LinearSystem
from ..apply_gauge import apply_gauge
from ..is_admissible import is_admissible

logger = logging.getLogger(__name__)


class Segment(BaseModel):
    """Coordinates start..stop-1; complex segments hold Theta pairs."""

    model_config = ConfigDict(frozen=True)

    start: int = Field(ge=0)
    stop: int
    complex_block: bool = False

    @property
    def size(self) -> int:
        return self.stop - self.start

    @property
    def indices(self) -> range:
        return range(self.start, self.stop)


class ReductionState(BaseModel):
    """Mutable bookkeeping of one reduction run."""

    system: LinearSystem
    segments: list[Segment]
    chain: list[GaugeTransform] = Field(default_factory=list)
    ramifications: int = 0
    reductions: int = 0

    def apply(self, transform: GaugeTransform) -> None:
        if not is_admissible(self.system, transform):
            raise Inadmissible(f"Reduction produced an inadmissible {transform.kind} gauge")
        before = self.system.p
        self.system = apply_gauge(self.system, transform)
        self.chain.append(transform)
        logger.info(f"Step {len(self.chain)}: {transform.kind}, rank {before} -> {self.system.p}")

    def apply_similarity(self, segment: Segment, t: ConstMatrix) -> None:
        """Conjugate one segment by a constant matrix; identity is skipped."""
        if t == identity(segment.size):
            return
        full = embed_constant(self.system.n, segment, t)
        self.apply(PolyRegular(P=PolyMatrix.constant(full, 0)))

    def apply_series(self, segment: Segment, coefficients: Sequence[ConstMatrix]) -> None:
        """Apply I + sum P_t x^t on one segment; skipped when every P_t vanishes."""
        if all(is_zero_matrix(c) for c in coefficients[1:]):
            return
        n = self.system.n
        full = [embed_constant(n, segment, coefficients[0])]
        full.extend(embed_constant(n, segment, c, base=False) for c in coefficients[1:])
        self.apply(PolyRegular(P=PolyMatrix.from_const_sequence(full, max(len(full) - 1, 0))))

    def shift(self, coordinates: Sequence[int]) -> None:
        exponents = tuple(1 if i in coordinates else 0 for i in range(self.system.n))
        self.apply(DiagMonomial(exponents=exponents))

    def replace(self, old: Segment, new: Sequence[Segment]) -> None:
        k = self.segments.index(old)
        self.segments[k: k + 1] = list(new)


def embed_constant(n: int, segment: Segment, block: ConstMatrix, base: bool = True) -> ConstMatrix:
    """Identity (or zero) n x n matrix with block placed on the segment."""
    out = identity(n) if base else [[Fraction(0)] * n for _ in range(n)]
    for a, i in enumerate(segment.indices):
        for b, j in enumerate(segment.indices):
            out[i][j] = block[a][b]
    return out


def block_coefficient(system: LinearSystem, segment: Segment, k: int) -> ConstMatrix:
    return [[system.A.entry(i, j).coefficient(k) for j in segment.indices] for i in segment.indices]


def theta_scalar(m: ConstMatrix) -> bool:
    """m = Theta(mu I) for some complex mu."""
    a, b = m[0][0], m[1][0]
    for bi in range(0, len(m), 2):
        for bj in range(0, len(m), 2):
            want = (a, -b, b, a) if bi == bj else (0, 0, 0, 0)
            got = (m[bi][bj], m[bi][bj + 1], m[bi + 1][bj], m[bi + 1][bj + 1])
            if got != want:
                return False
    return True


def real_scalar(m: ConstMatrix) -> bool:
    mu = m[0][0]
    return all(m[i][j] == (mu if i == j else 0) for i in range(len(m)) for j in range(len(m)))


def segment_level(system: LinearSystem, segment: Segment) -> int:
    """First level below the rank where the segment block is not scalar; the rank when none is."""
    check = theta_scalar if segment.complex_block else real_scalar
    for j in range(system.p):
        if not check(block_coefficient(system, segment, j)):
            return j
    return system.p


def first_open_segment(state: ReductionState) -> Optional[tuple[Segment, int]]:
    for segment in state.segments:
        level = segment_level(state.system, segment)
        if level < state.system.p:
            return segment, level
    return None
