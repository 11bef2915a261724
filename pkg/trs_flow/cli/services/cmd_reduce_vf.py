"""
reduce-vf command.
"""

import logging
from pathlib import Path

from ...shared.errors import InvarianceViolated, TrsFlowError, Undecidable
from ...vf_couples.models.invariant_couple import InvariantCouple
from ...vf_couples.models.results import VFReduction
from ...vf_couples.models.transform_chain import TransformChain
from ...vf_couples.services.check_invariance import check_invariance
from ...vf_couples.services.recognize_trs_vf import recognize_trs_vf
from ...vf_couples.services.reduce_vf_trs import reduce_vf_trs
from ...vf_couples.services.refine_trs import refine_trs
from ..models.job_config import JobConfig
from .artifacts import load_document, load_model, write_artifact

logger = logging.getLogger(__name__)


def replay_vf(couple: InvariantCouple, chain_path: str, N: int, M: int) -> VFReduction:
    """Apply a saved coordinate chain and recognize the TRS form of type (q, N, M)."""
    chain = load_model(load_document(chain_path), "chain", TransformChain)
    transformed = chain.replay(couple)
    form = recognize_trs_vf(transformed, N, M)
    if form is None:
        raise Undecidable(f"Replayed couple is not in TRS form of type (q, {N}, {M})")
    return VFReduction(couple=transformed, chain=chain, form=form)


def run_reduction(couple: InvariantCouple, config: JobConfig) -> VFReduction:
    """reduce_vf_trs, then refine_trs when N or M is asked for."""
    stage = reduce_vf_trs(couple, config.working_order, config.fuel, config.cluster_tol)
    if config.N == 0 and config.M == 0:
        return stage
    refined = refine_trs(stage.couple, config.N, config.M, config.cluster_tol)
    return VFReduction(
        couple=refined.couple, chain=stage.chain.extend(refined.chain.steps), form=refined.form, linear=stage.linear
    )


def cmd_reduce_vf(config: JobConfig) -> list[Path]:
    """
    Reduce an invariant couple file and write chain.json and form.json.

    form.json carries the TRS form, the transformed couple and its curve.
    """
    couple = load_model(load_document(config.inputs[0]), "couple", InvariantCouple)
    report = check_invariance(couple)
    if not report.holds:
        raise InvarianceViolated(f"check_invariance: residual nonzero at x^{report.failing_order}")
    logger.info(f"reduce-vf: n = {couple.n}, invariance verified through x^{report.verified_order}")

    try:
        if config.replay is not None:
            result = replay_vf(couple, config.replay, config.N, config.M)
        else:
            result = run_reduction(couple, config)
    except TrsFlowError as e:
        logger.error(f"reduce-vf failed: {type(e).__name__}: {str(e)}")
        raise

    form = result.form
    verdict = f"trs({form.q},{form.N},{form.M})"
    chain_path = write_artifact(config, "chain.json", "vf_chain", verdict, {"chain": result.chain.model_dump(mode="json")})
    form_path = write_artifact(
        config,
        "form.json",
        "vf_form",
        verdict,
        {
            "form": form.model_dump(mode="json"),
            "couple": result.couple.model_dump(mode="json"),
            "curve": result.couple.curve.model_dump(mode="json"),
            "chain": result.chain.model_dump(mode="json"),
        },
    )
    return [chain_path, form_path]
