"""
trs-flow command line.
An invoke Program whose tasks are the pipeline commands; exit codes are
0 ok, 2 parse, 3 precondition, 4 precision or fuel, 5 undecidable.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable, Optional

from invoke import Collection, Context, Program, task
from invoke.exceptions import Exit
from pydantic import ValidationError

from ..settings import get_settings
from ..shared.errors import EXIT_PARSE, EXIT_PRECONDITION, TrsFlowError
from .models.job_config import Command, JobConfig
from .services.cmd_omega_eval import cmd_omega_eval
from .services.cmd_reduce_linear import cmd_reduce_linear
from .services.cmd_reduce_vf import cmd_reduce_vf
from .services.cmd_trajectory import cmd_trajectory
from .services.cmd_verify import cmd_verify

logger = logging.getLogger(__name__)

HANDLERS: dict[Command, Callable[[JobConfig], list[Path]]] = {
    Command.REDUCE_LINEAR: cmd_reduce_linear,
    Command.REDUCE_VF: cmd_reduce_vf,
    Command.TRAJECTORY: cmd_trajectory,
    Command.VERIFY: cmd_verify,
    Command.OMEGA_EVAL: cmd_omega_eval,
}

COMMON_HELP = {
    "path": "Input JSON file",
    "out": "Output directory (default: out)",
    "working_order": "Truncation order the reduction starts from",
    "fuel": "Allowance for ramifications and rank reductions",
    "tol": "Integration tolerance",
    "seed": "Seed for randomized checks",
}


def configure_logging() -> None:
    logging.basicConfig(
        level=get_settings().log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def run_job(command: Command, **flags: Any) -> list[Path]:
    """
    Build the JobConfig from flags, run the handler and map failures to exit codes.

    Raises:
        Exit: With code 2 for unreadable input, the error's exit code for domain errors
    """
    configure_logging()
    options = {k: v for k, v in flags.items() if v is not None}
    try:
        config = JobConfig(command=command, **options)
        logger.info(f"{command.value}: seed {config.seed}, output {config.out_dir}")
        paths = HANDLERS[command](config)
    except (ValidationError, json.JSONDecodeError, KeyError, FileNotFoundError) as e:
        logger.error(f"{command.value}: cannot parse input: {str(e)}")
        raise Exit(f"{command.value}: parse error: {str(e)}", code=EXIT_PARSE) from e
    except TrsFlowError as e:
        logger.error(f"{command.value}: {type(e).__name__}: {str(e)}")
        raise Exit(f"{command.value}: {type(e).__name__}: {str(e)}", code=e.exit_code) from e
    except ValueError as e:
        logger.error(f"{command.value}: invalid request: {str(e)}")
        raise Exit(f"{command.value}: {str(e)}", code=EXIT_PRECONDITION) from e
    for path in paths:
        print(path)
    return paths


@task(positional=["path"], auto_shortflags=False, help={**COMMON_HELP, "replay": "Gauge chain file to replay"})
def reduce_linear(
    c: Context,
    path: str,
    out: Optional[str] = None,
    working_order: Optional[int] = None,
    fuel: Optional[int] = None,
    cluster_tol: Optional[float] = None,
    replay: Optional[str] = None,
) -> None:
    """Reduce a singular linear system to regular or TRS form."""
    run_job(
        Command.REDUCE_LINEAR,
        inputs=[path],
        out_dir=out,
        working_order=working_order,
        fuel=fuel,
        cluster_tol=cluster_tol,
        replay=replay,
    )


@task(
    positional=["path"],
    auto_shortflags=False,
    help={**COMMON_HELP, "N": "Extra flatness of the vestigial part", "M": "Weight of y", "replay": "Chain file to replay"},
)
def reduce_vf(
    c: Context,
    path: str,
    N: int = 0,
    M: int = 0,
    out: Optional[str] = None,
    working_order: Optional[int] = None,
    fuel: Optional[int] = None,
    cluster_tol: Optional[float] = None,
    replay: Optional[str] = None,
) -> None:
    """Reduce an invariant couple to TRS form of type (q, N, M)."""
    run_job(
        Command.REDUCE_VF,
        inputs=[path],
        N=N,
        M=M,
        out_dir=out,
        working_order=working_order,
        fuel=fuel,
        cluster_tol=cluster_tol,
        replay=replay,
    )


@task(
    positional=["path"],
    auto_shortflags=False,
    help={**COMMON_HELP, "seed_order": "Jet order of the seed", "window": "x0:x1", "horn": "k:C:eps (adds a basin probe)"},
)
def trajectory(
    c: Context,
    path: str,
    seed_order: Optional[int] = None,
    window: Optional[str] = None,
    horn: Optional[str] = None,
    tol: Optional[float] = None,
    out: Optional[str] = None,
) -> None:
    """Shoot a trajectory asymptotic to the formal curve and certify its contact."""
    run_job(
        Command.TRAJECTORY, inputs=[path], seed_order=seed_order, window=window, horn=horn, tol=tol, out_dir=out
    )


@task(positional=["path"], auto_shortflags=False, help={**COMMON_HELP, "horn": "k:C:eps (adds a basin check)"})
def verify(
    c: Context,
    path: str,
    seed: Optional[int] = None,
    horn: Optional[str] = None,
    tol: Optional[float] = None,
    out: Optional[str] = None,
) -> None:
    """Run every applicable invariant check and write a pass/fail matrix."""
    run_job(Command.VERIFY, inputs=[path], seed=seed, horn=horn, tol=tol, out_dir=out)


@task(positional=["path"], auto_shortflags=False, help={**COMMON_HELP, "points": "Comma-separated x values"})
def omega_eval(c: Context, path: str, points: Optional[str] = None, out: Optional[str] = None) -> None:
    """Evaluate the straightener Omega_R at the given points."""
    run_job(Command.OMEGA_EVAL, inputs=[path], points=points, out_dir=out)


namespace = Collection(reduce_linear, reduce_vf, trajectory, verify, omega_eval)
program = Program(namespace=namespace, name="trs-flow", binary="trs-flow", version="0.1.0")
