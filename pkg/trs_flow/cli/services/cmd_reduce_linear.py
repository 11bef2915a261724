"""
reduce-linear command.
"""

import logging
from pathlib import Path

from ...linear_systems.models.gauge_transform import gauge_chain_adapter
from ...linear_systems.models.linear_system import LinearSystem
from ...linear_systems.models.reduction_result import ReductionResult
from ...linear_systems.services.apply_gauge import apply_gauge
from ...linear_systems.services.recognize_trs import recognize_trs
from ...linear_systems.services.reduce_linear_full import reduce_linear_full
from ...shared.errors import TrsFlowError, Undecidable
from ..models.job_config import JobConfig
from .artifacts import load_document, load_model, payload_of, write_artifact

logger = logging.getLogger(__name__)


def replay_linear(system: LinearSystem, chain_path: str) -> ReductionResult:
    """Apply a saved gauge chain and recognize the result."""
    payload = payload_of(load_document(chain_path))
    chain = gauge_chain_adapter.validate_python(payload.get("chain", payload))
    current = system
    for gauge in chain:
        current = apply_gauge(current, gauge)
    if current.is_regular:
        return ReductionResult(chain=chain, system=current)
    form = recognize_trs(current)
    if form is None:
        raise Undecidable("Replayed system is not in TRS form")
    return ReductionResult(chain=chain, system=current, form=form)


def cmd_reduce_linear(config: JobConfig) -> list[Path]:
    """
    Reduce a linear system file and write chain.json and form.json.

    The verdict is 'regular' or 'trs'.
    """
    system = load_model(load_document(config.inputs[0]), "system", LinearSystem)
    logger.info(f"reduce-linear: n = {system.n}, p = {system.p}")
    try:
        if config.replay is not None:
            result = replay_linear(system, config.replay)
        elif system.is_regular:
            result = ReductionResult(chain=[], system=system)
        else:
            result = reduce_linear_full(system, config.working_order, config.fuel, config.cluster_tol)
    except TrsFlowError as e:
        logger.error(f"reduce-linear failed in linear reduction: {str(e)}")
        raise

    verdict = "regular" if result.regular else "trs"
    dumped = result.model_dump(mode="json")
    chain_path = write_artifact(config, "chain.json", "linear_chain", verdict, {"chain": dumped["chain"]})
    form_path = write_artifact(
        config, "form.json", "linear_form", verdict, {"system": dumped["system"], "form": dumped["form"]}
    )
    return [chain_path, form_path]
