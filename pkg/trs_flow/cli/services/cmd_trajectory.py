"""
trajectory command.
Shoots an asymptotic trajectory of a TRS form, through the straightener when
the form has rotational part.
"""

import asyncio
import logging
from pathlib import Path
from typing import Optional

from ...dynamics_numeric.models.field_evaluator import FieldEvaluator
from ...dynamics_numeric.models.horn_spec import HornSpec
from ...dynamics_numeric.services.basin_probe import basin_probe
from ...dynamics_numeric.services.shoot_asymptotic import shoot_asymptotic
from ...linear_systems.services.unstability_index import unstability_index
from ...shared.errors import HypothesisViolated, SeedTooCoarse
from ...straightener.services.extract_rotational import extract_rotational
from ...straightener.services.straighten_field import straighten_field
from ...vf_couples.models.formal_curve import FormalCurve
from ...vf_couples.models.trs_vf_form import TRSVFForm
from ..models.job_config import JobConfig
from .artifacts import load_document, payload_of, write_artifact

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = (1e-2, 0.3)
DEFAULT_SEED_ORDER = 8


def field_for(form: TRSVFForm, curve: FormalCurve) -> tuple[FieldEvaluator, FormalCurve, bool]:
    """Evaluator and curve to shoot along; straightened when a rotational part exists."""
    R = extract_rotational(form.D, form.bs, form.q)
    if R is not None:
        try:
            straightened = straighten_field(form, R, strict=False)
        except HypothesisViolated as e:
            logger.warning(f"Straightener not applicable ({str(e)}); shooting in TRS coordinates")
        else:
            logger.info(f"Straightener engaged with {len(R.pairs)} rotation pairs")
            return FieldEvaluator.from_straightened(straightened), FormalCurve.zero(curve.n, curve.trunc), True
    return FieldEvaluator.from_trs_form(form), curve, False


def cmd_trajectory(config: JobConfig) -> list[Path]:
    """
    Write trajectory.csv and contact.json (and basin.json with --horn).

    The curve is taken from the form file when present, else the x-axis.
    """
    payload = payload_of(load_document(config.inputs[0]))
    form = TRSVFForm.model_validate(payload.get("form", payload))
    K = config.seed_order if config.seed_order is not None else DEFAULT_SEED_ORDER
    curve = FormalCurve.model_validate(payload["curve"]) if "curve" in payload else FormalCurve.zero(form.n, K)
    window = config.window or DEFAULT_WINDOW
    f, shot_curve, straightened = field_for(form, curve)
    K = min(K, shot_curve.trunc)

    try:
        shot = shoot_asymptotic(f, shot_curve, K, window, tol=config.tol)
    except SeedTooCoarse as e:
        write_artifact(
            config,
            "contact.json",
            "contact",
            "escape",
            {"error": str(e), "hint": "retry with a larger --seed-order or a smaller window start"},
        )
        raise

    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = [out / "trajectory.csv"]
    shot.trajectory.to_csv(written[0])
    certified: Optional[int] = shot.contact.max_certified
    meta = shot.trajectory.model_dump(mode="json", exclude={"xs", "ys", "offsets"})
    written.append(
        write_artifact(
            config,
            "contact.json",
            "contact",
            "certified" if certified is not None else "uncertified",
            {
                "contact": shot.contact.model_dump(mode="json"),
                "max_certified": certified,
                "direction": shot.direction,
                "straightened": straightened,
                "seed_order": K,
                "integrator": meta,
            },
        )
    )

    if config.horn is not None:
        k, C, eps = config.horn
        horn = HornSpec(curve=shot_curve, k=k, C=C, eps=eps)
        expected = 1 + unstability_index(form.D, form.bs) if form.q > 0 else 1
        report = asyncio.run(basin_probe(f, horn, expected_dim=expected, tol=config.tol))
        written.append(
            write_artifact(
                config,
                "basin.json",
                "basin",
                "consistent" if report.consistent else "inconsistent",
                {"basin": report.model_dump(mode="json"), "empirical_dim": report.empirical_dim, "counts": report.counts},
            )
        )
    return written
