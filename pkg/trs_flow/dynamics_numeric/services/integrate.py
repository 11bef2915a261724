"""
Integration service.
Integrates dy/dx = F(x, y) in the logarithmic variable t = log x, so steps
scale with x, switching to an implicit solver when the field is stiff.
"""

import logging
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy.integrate import solve_ivp

from ...settings import get_settings
from ...shared.errors import DomainError, Escape, TrsFlowError, Undecidable
from ..models.field_evaluator import FieldEvaluator
from ..models.numeric_trajectory import NumericTrajectory

logger = logging.getLogger(__name__)

Event = Callable[[float, np.ndarray], float]

EXPLICIT = "DOP853"
IMPLICIT = "Radau"
STIFF_RATIO = 64.0


class _BudgetExceeded(Exception):
    pass


def _check_domain(f: FieldEvaluator, *xs: float) -> None:
    for x in xs:
        if not 0 < x <= f.x_max:
            raise DomainError(f"x = {x:g} outside (0, {f.x_max:g}]")


def stiffness_ratio(f: FieldEvaluator, x0: float, x1: float, y0: np.ndarray, samples: int) -> float:
    """||x J(x, y0)|| times the nominal log-step, worst endpoint."""
    h = abs(np.log(x1) - np.log(x0)) / max(samples - 1, 1)
    return max(float(np.linalg.norm(x * f.jacobian(x, y0), 2)) * h for x in (x0, x1))


def solve_log(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    jac: Callable[[float, np.ndarray], np.ndarray],
    x0: float,
    y0: np.ndarray,
    x1: float,
    rtol: float,
    atol: Union[float, np.ndarray],
    samples: int,
    bound_norm: Callable[[np.ndarray], float],
    events: Sequence[Event] = (),
    stiff: bool = False,
) -> NumericTrajectory:
    """
    Run solve_ivp on t = log x with an explicit-then-implicit strategy.

    rhs and jac take (x, state) and return d state / dx and its Jacobian.
    Events take (x, state); the first zero crossing stops the integration.
    """
    budget = get_settings().stiffness_budget
    t0, t1 = float(np.log(x0)), float(np.log(x1))
    t_eval = np.linspace(t0, t1, samples)
    calls = [0]

    def fun(t: float, y: np.ndarray) -> np.ndarray:
        calls[0] += 1
        if calls[0] > budget:
            raise _BudgetExceeded()
        x = float(np.exp(t))
        return x * rhs(x, y)

    def jacobian(t: float, y: np.ndarray) -> np.ndarray:
        x = float(np.exp(t))
        return x * jac(x, y)

    def escape(t: float, y: np.ndarray) -> float:
        return bound_norm(y)

    escape.terminal = True  # type: ignore[attr-defined]
    wrapped = [escape]
    for event in events:
        def stop(t: float, y: np.ndarray, event: Event = event) -> float:
            return event(float(np.exp(t)), y)

        stop.terminal = True  # type: ignore[attr-defined]
        wrapped.append(stop)

    fallback = False
    method = IMPLICIT if stiff else EXPLICIT
    while True:
        calls[0] = 0
        kwargs = {"jac": jacobian} if method == IMPLICIT else {}
        try:
            sol = solve_ivp(
                fun, [t0, t1], y0, method=method, rtol=rtol, atol=atol, t_eval=t_eval, events=wrapped, **kwargs
            )
        except _BudgetExceeded:
            sol = None
        if method == EXPLICIT and (sol is None or sol.status == -1):
            logger.warning(f"{EXPLICIT} gave up after {calls[0]} evaluations; retrying with {IMPLICIT}")
            method, fallback = IMPLICIT, True
            continue
        break

    if sol is None:
        raise Undecidable(f"{IMPLICIT} exceeded the evaluation budget {budget}")
    if sol.status == -1:
        raise Undecidable(f"Integration failed: {sol.message}")
    if len(sol.t_events[0]) > 0:
        raise Escape(float(np.exp(sol.t_events[0][0])))
    xs = np.exp(sol.t)
    states = sol.y.T
    event_x: Optional[float] = None
    for k, hits in enumerate(sol.t_events[1:], start=1):
        if len(hits) > 0:
            event_x = float(np.exp(hits[0]))
            if event_x != xs[-1]:
                xs = np.append(xs, event_x)
                states = np.vstack([states, sol.y_events[k][0]])
            break
    if x1 < x0:
        xs, states = xs[::-1], states[::-1]
    return NumericTrajectory(
        xs=xs.tolist(),
        ys=states.tolist(),
        method=method,
        rtol=rtol,
        atol=float(np.min(atol)),
        nfev=int(sol.nfev),
        njev=int(sol.njev),
        nlu=int(sol.nlu),
        stiff_fallback=fallback,
        message=str(sol.message),
        event_x=event_x,
    )


def integrate(
    f: FieldEvaluator,
    x0: float,
    y0: Sequence[float],
    x1: float,
    tol: Optional[float] = None,
    samples: int = 256,
    events: Sequence[Event] = (),
) -> NumericTrajectory:
    """
    Integrate the field from (x0, y0) to x1 in either direction.

    Args:
        f: Field evaluator
        x0: Start abscissa, 0 < x0 <= f.x_max
        y0: Start value
        x1: Target abscissa, 0 < x1 <= f.x_max
        tol: Relative and absolute tolerance
        samples: Number of output samples, evenly spaced in log x
        events: Extra stopping conditions (x, y) -> float

    Returns:
        Trajectory sorted by increasing x

    Raises:
        DomainError: An endpoint is outside (0, x_max]
        Escape: ||y|| reached the domain bound
    """
    tolerance = tol if tol is not None else get_settings().tol
    start = np.asarray(y0, dtype=float)
    if start.shape != (f.n,):
        raise ValueError(f"Initial value has shape {start.shape}, expected ({f.n},)")
    _check_domain(f, x0, x1)
    if x0 == x1:
        raise ValueError("Integration needs x1 != x0")
    if np.linalg.norm(start) >= f.bound:
        raise Escape(x0, f"initial value already outside the bound {f.bound:g}")

    try:
        stiff = stiffness_ratio(f, x0, x1, start, samples) > STIFF_RATIO
        if stiff:
            logger.info(f"Field {f.label} is stiff on [{min(x0, x1):g}, {max(x0, x1):g}]; using {IMPLICIT}")
        trajectory = solve_log(
            f.slope,
            f.jacobian,
            x0,
            start,
            x1,
            tolerance,
            tolerance,
            samples,
            lambda y: float(np.linalg.norm(y)) - f.bound,
            events,
            stiff,
        )
        logger.debug(f"Integrated {f.label} from {x0:g} to {x1:g} with {trajectory.method}, {trajectory.nfev} evaluations")
        return trajectory
    except TrsFlowError:
        raise
    except Exception as e:
        logger.error(f"Integration of {f.label} failed: {str(e)}")
        raise
