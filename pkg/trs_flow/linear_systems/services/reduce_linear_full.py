"""
Full linear reduction service.
Drives a singular linear system to a regular system or to a TRS form whose
residual part has good spectrum.
"""

import logging
from typing import Optional

from ...series_core.services.linear_algebra import charpoly_factors
from ...settings import get_settings
from ...shared.errors import EmptyPrecision, FuelExhausted, InsufficientPrecision, TrsFlowError, Undecidable
from ..models.linear_system import LinearSystem
from ..models.reduction_result import ReductionResult
from .recognize_trs import recognize_trs
from .reduction import (
    ReductionState,
    Segment,
    first_open_segment,
    pair_complex,
    reduce_nilpotent,
    shift_residual,
    split_eigenclasses,
)
from .reduction.state import block_coefficient

logger = logging.getLogger(__name__)


def _advance(state: ReductionState, segment: Segment, level: int, fuel: int) -> None:
    """One reduction step on a segment that is not scalar below the rank."""
    if segment.complex_block:
        raise Undecidable(f"Complex block at {segment.start} is not Theta-scalar at level {level}")
    factors = charpoly_factors(block_coefficient(state.system, segment, level))
    if len(factors) > 1:
        split_eigenclasses(state, segment, level, factors)
        return
    coeffs, mult = factors[0]
    if len(coeffs) == 2:
        if state.reductions >= fuel:
            raise FuelExhausted(f"Rank reduction allowance {fuel} exhausted")
        reduce_nilpotent(state, segment, level, fuel)
        return
    if len(coeffs) == 3:
        pair_complex(state, segment, level, coeffs, mult)
        return
    raise Undecidable(f"Irreducible eigenclass of degree {len(coeffs) - 1} at level {level}")


def reduce_linear_full(
    system: LinearSystem,
    working_order: Optional[int] = None,
    fuel: Optional[int] = None,
    cluster_tol: Optional[float] = None,
) -> ReductionResult:
    """
    Reduce a singular system by an admissible gauge chain.

    Eigenclasses of the first non-scalar coefficient are split apart, single
    eigenvalue blocks are sheared (ramifying at fractional Newton slopes),
    and the residual part is shifted by integers to good spectrum.

    Args:
        system: Singular system with A(0) != 0
        working_order: Truncation the computation starts from
        fuel: Allowance for ramifications and for rank reductions, each
        cluster_tol: Separation tolerance for float eigenvalues

    Returns:
        Chain, final system and its TRS form (None when regular)

    Raises:
        InsufficientPrecision: Truncation ran out before termination
        Undecidable: Eigenvalue structure outside exact reach
        FuelExhausted: Step allowance spent
    """
    settings = get_settings()
    order = working_order if working_order is not None else settings.working_order
    allowance = fuel if fuel is not None else settings.fuel
    if system.p < 0:
        raise ValueError("Full reduction needs a singular system (p >= 0)")
    start = system if system.trunc <= order else LinearSystem(n=system.n, p=system.p, A=system.A.truncate(order))
    state = ReductionState(system=start, segments=[Segment(start=0, stop=system.n)])
    logger.info(f"Reducing system of size {system.n}, rank {system.p}, working order {start.trunc}")

    try:
        for _ in range(64 * allowance):
            current = state.system
            if current.is_regular:
                logger.info(f"System is regular after {len(state.chain)} steps")
                return ReductionResult(chain=state.chain, system=current)
            if current.trunc < current.p + 1:
                raise InsufficientPrecision(
                    f"Working order exhausted: truncation {current.trunc} below rank {current.p} + 1"
                )
            open_segment = first_open_segment(state)
            if open_segment is not None:
                _advance(state, open_segment[0], open_segment[1], allowance)
                continue
            if shift_residual(state, cluster_tol):
                continue
            form = recognize_trs(current)
            if form is None:
                raise Undecidable("Reduced system was not recognized as a TRS form")
            logger.info(f"Reached TRS form of rank {form.q} after {len(state.chain)} steps")
            return ReductionResult(chain=state.chain, system=current, form=form)
        raise FuelExhausted(f"Reduction did not settle within {64 * allowance} steps")
    except EmptyPrecision as e:
        raise InsufficientPrecision(f"Working order exhausted: {e}") from e
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Reduction failed: {str(e)}")
        raise
