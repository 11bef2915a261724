"""
Basin probe service.
Classifies seeds in a horn by whether they stay in it as x decreases, and
estimates the dimension of the staying set along coordinate lines.
"""

import asyncio
import logging
from typing import Optional

import numpy as np

from ...shared.errors import Escape, TrsFlowError
from ..models.basin_report import BasinReport, LineProbe, SeedOutcome, SeedVerdict
from ..models.field_evaluator import FieldEvaluator
from ..models.horn_spec import HornSpec
from .integrate import integrate

logger = logging.getLogger(__name__)

SPREAD = 0.9


def classify_seed(
    f: FieldEvaluator,
    horn: HornSpec,
    index: int,
    seed: np.ndarray,
    axis: int,
    x_seed: float,
    x_min: float,
    tol: Optional[float],
) -> SeedOutcome:
    """Follow one seed toward x_min and record whether it leaves the horn."""

    def leaves(x: float, y: np.ndarray) -> float:
        return float(np.linalg.norm(y - horn.center(x))) - horn.radius(x)

    offset = seed[axis] - horn.center(x_seed)[axis]
    try:
        trajectory = integrate(f, x_seed, seed, x_min, tol=tol, samples=32, events=[leaves])
    except Escape as e:
        return SeedOutcome(
            index=index, seed=seed.tolist(), verdict=SeedVerdict.ESCAPES, x_exit=e.x_star, side=int(np.sign(offset))
        )
    except TrsFlowError as e:
        logger.warning(f"Seed {index} is ambiguous: {str(e)}")
        return SeedOutcome(index=index, seed=seed.tolist(), verdict=SeedVerdict.AMBIGUOUS)
    if trajectory.event_x is None:
        return SeedOutcome(index=index, seed=seed.tolist(), verdict=SeedVerdict.STAYS)
    x_exit = trajectory.event_x
    exit_offset = trajectory.ys[0][axis] - horn.center(x_exit)[axis]
    return SeedOutcome(
        index=index,
        seed=seed.tolist(),
        verdict=SeedVerdict.ESCAPES,
        x_exit=x_exit,
        side=int(np.sign(exit_offset)) or int(np.sign(offset)),
    )


async def _classify_all(
    f: FieldEvaluator, horn: HornSpec, seeds: list[np.ndarray], axis: int, x_seed: float, x_min: float, tol: Optional[float]
) -> list[SeedOutcome]:
    tasks = [
        asyncio.to_thread(classify_seed, f, horn, i, seed, axis, x_seed, x_min, tol) for i, seed in enumerate(seeds)
    ]
    outcomes = await asyncio.gather(*tasks)
    return sorted(outcomes, key=lambda o: o.index)


async def _bisect(
    f: FieldEvaluator,
    horn: HornSpec,
    axis: int,
    lo: float,
    hi: float,
    x_seed: float,
    x_min: float,
    tol: Optional[float],
    steps: int,
) -> float:
    """Shrink [lo, hi] (escaping below and above) around the staying coordinate."""
    center = horn.center(x_seed)
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        seed = center.copy()
        seed[axis] = mid
        outcome = await asyncio.to_thread(classify_seed, f, horn, 0, seed, axis, x_seed, x_min, tol)
        if outcome.verdict == SeedVerdict.STAYS:
            return mid
        if outcome.side < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


async def basin_probe(
    f: FieldEvaluator,
    horn: HornSpec,
    x_seed: Optional[float] = None,
    grid: int = 9,
    x_min: Optional[float] = None,
    expected_dim: Optional[int] = None,
    tol: Optional[float] = None,
    bisections: int = 30,
) -> BasinReport:
    """
    Probe the horn with seeds on coordinate lines through its centre.

    Each line holds grid seeds spread over 90% of the horn radius at x_seed.
    A line is free when every seed stays; otherwise the staying coordinate
    is located by bisection between seeds escaping on opposite sides. The
    empirical dimension of the staying set is 1 plus the number of free lines.
    Seeds are integrated concurrently; results are merged in seed order.

    Args:
        f: Field evaluator
        horn: Horn around the formal curve
        x_seed: Slice the seeds start on (default eps / 2)
        grid: Seeds per line
        x_min: Abscissa a seed must reach inside the horn (default 1e-4 * eps)
        expected_dim: 1 + u(D), recorded for comparison
        tol: Integration tolerance
        bisections: Bisection steps per constrained line
    """
    start = x_seed if x_seed is not None else horn.eps / 2
    stop = x_min if x_min is not None else 1e-4 * horn.eps
    if not 0 < stop < start < horn.eps:
        raise ValueError(f"Need 0 < x_min < x_seed < eps, got {stop:g}, {start:g}, {horn.eps:g}")
    if grid < 2:
        raise ValueError("Each line needs at least two seeds")
    center = horn.center(start)
    radius = horn.radius(start)
    logger.info(f"Probing horn of contact {horn.k} at x = {start:g} with {grid} seeds per line")

    try:
        lines = []
        for axis in range(f.n):
            seeds = []
            for s in np.linspace(-SPREAD, SPREAD, grid):
                seed = center.copy()
                seed[axis] += s * radius
                seeds.append(seed)
            outcomes = await _classify_all(f, horn, seeds, axis, start, stop, tol)
            free = all(o.verdict == SeedVerdict.STAYS for o in outcomes)
            boundary: Optional[float] = None
            if not free:
                stays = [o for o in outcomes if o.verdict == SeedVerdict.STAYS]
                if stays:
                    boundary = stays[len(stays) // 2].seed[axis]
                else:
                    below = [o.seed[axis] for o in outcomes if o.verdict == SeedVerdict.ESCAPES and o.side < 0]
                    above = [o.seed[axis] for o in outcomes if o.verdict == SeedVerdict.ESCAPES and o.side > 0]
                    if below and above and max(below) < min(above):
                        boundary = await _bisect(f, horn, axis, max(below), min(above), start, stop, tol, bisections)
            lines.append(LineProbe(axis=axis, outcomes=outcomes, free=free, boundary=boundary))

        report = BasinReport(x_seed=start, x_min=stop, lines=lines, expected_dim=expected_dim)
        logger.info(f"Empirical dimension {report.empirical_dim}, counts {report.counts}")
        return report
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Basin probe failed: {str(e)}")
        raise
