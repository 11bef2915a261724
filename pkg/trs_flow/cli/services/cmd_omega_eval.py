"""
omega-eval command.
"""

import logging
from pathlib import Path
from typing import Any

from ...straightener.models.rotational_matrix import RotationalMatrix
from ...straightener.models.straightener_eval import StraightenerEval
from ...straightener.services.extract_rotational import extract_rotational
from ...straightener.services.omega_eval import omega_eval
from ...shared.errors import HypothesisViolated
from ...vf_couples.models.trs_vf_form import TRSVFForm
from ..models.job_config import JobConfig
from .artifacts import load_document, payload_of, write_artifact

logger = logging.getLogger(__name__)

DEFAULT_POINTS = (0.05, 0.1, 0.2, 0.5)


def straightener_from(payload: dict[str, Any]) -> StraightenerEval:
    """From {"R": ..., "q": ...}, a bare rotational matrix, or a TRS form."""
    if "R" in payload:
        R = RotationalMatrix.model_validate(payload["R"])
        return StraightenerEval(R=R, q_param=int(payload.get("q", R.degree)))
    if "pairs" in payload:
        R = RotationalMatrix.model_validate(payload)
        return StraightenerEval(R=R, q_param=R.degree)
    form = TRSVFForm.model_validate(payload.get("form", payload))
    R = extract_rotational(form.D, form.bs, form.q)
    if R is None:
        raise HypothesisViolated("The form has no dominant rotational part")
    return StraightenerEval(R=R, q_param=max(form.q - 1, 0))


def cmd_omega_eval(config: JobConfig) -> list[Path]:
    """Write omega.json with Omega_R(x) and the angles at each point."""
    se = straightener_from(payload_of(load_document(config.inputs[0])))
    points = config.points or list(DEFAULT_POINTS)
    rows = [
        {"x": x, "angles": se.angles(x), "omega": omega_eval(se, x).tolist(), "precision": se.precision(x)}
        for x in points
    ]
    logger.info(f"omega-eval at {len(points)} points, n = {se.n}")
    return [write_artifact(config, "omega.json", "omega", "ok", {"R": se.R.model_dump(mode="json"), "points": rows})]
