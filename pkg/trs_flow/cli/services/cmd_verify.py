"""
verify command.
Runs every applicable invariant check on a form file and writes a pass/fail matrix.
"""

import asyncio
import logging
from pathlib import Path
from typing import Any, Callable, Optional

from pydantic import ValidationError

from ...dynamics_numeric.models.field_evaluator import FieldEvaluator
from ...dynamics_numeric.models.horn_spec import HornSpec
from ...dynamics_numeric.services.basin_probe import basin_probe
from ...dynamics_numeric.services.center_manifold_jet import center_manifold_jet
from ...linear_systems.services.has_good_spectrum import has_good_spectrum
from ...linear_systems.services.no_dominant_rotation import no_dominant_rotation
from ...linear_systems.services.unstability_index import unstability_index
from ...series_core.models.block_structure import BlockStructure
from ...series_core.models.poly_matrix import PolyMatrix
from ...series_core.services.compatible import compatible
from ...shared.errors import TrsFlowError
from ...straightener.models.straightener_eval import StraightenerEval
from ...straightener.services.extract_rotational import extract_rotational
from ...straightener.services.verify_omega_properties import verify_omega_properties
from ...vf_couples.models.formal_curve import FormalCurve
from ...vf_couples.models.transform_chain import TransformChain
from ...vf_couples.models.trs_vf_form import TRSVFForm
from ..models.artifact import CheckResult, VerifyReport
from ..models.job_config import JobConfig
from .artifacts import load_document, payload_of, write_artifact

logger = logging.getLogger(__name__)

OMEGA_SAMPLES = (0.05, 0.1, 0.2, 0.4)


def _run(name: str, check: Callable[[], tuple[Optional[bool], str]]) -> CheckResult:
    """A check that raises a domain error fails with the error as detail."""
    try:
        passed, detail = check()
    except TrsFlowError as e:
        passed, detail = False, f"{type(e).__name__}: {str(e)}"
    logger.info(f"verify {name}: {'skipped' if passed is None else 'pass' if passed else 'FAIL'} {detail}")
    return CheckResult(name=name, passed=passed, detail=detail)


def structural_checks(raw: dict[str, Any], cluster_tol: float) -> list[CheckResult]:
    """Shape, degree, compatibility and good spectrum of the raw D, C, block structure."""
    bs = BlockStructure.model_validate(raw["bs"])
    D = PolyMatrix.model_validate(raw["D"])
    C = PolyMatrix.model_validate(raw["C"])
    q = int(raw["q"])
    same = D.n == C.n == bs.dimension
    checks = [CheckResult(name="shape", passed=same, detail=f"D {D.n}, C {C.n}, blocks {bs.dimension}")]
    if not same:
        return checks
    checks.append(CheckResult(name="degree", passed=D.degree() <= q - 1, detail=f"deg D = {D.degree()}, q = {q}"))
    checks.append(_run("compatible", lambda: (compatible(C, D, bs), "C block-compatible with D")))
    checks.append(_run("good_spectrum", lambda: (has_good_spectrum(C, cluster_tol), "no integer eigenvalue gaps")))
    return checks


def form_checks(form: TRSVFForm, chain: Optional[TransformChain], config: JobConfig) -> list[CheckResult]:
    checks = [
        _run("no_dominant_rotation", lambda: (no_dominant_rotation(form.D, form.bs), "")),
    ]
    if form.q > 0:
        checks.append(_run("unstability_index", lambda: (True, f"u(D) = {unstability_index(form.D, form.bs)}")))

    R = extract_rotational(form.D, form.bs, form.q)
    if R is None:
        checks.append(CheckResult(name="omega_properties", passed=None, detail="no rotational part"))
    else:
        se = StraightenerEval(R=R, q_param=max(form.q - 1, 0))

        def omega() -> tuple[Optional[bool], str]:
            report = verify_omega_properties(se, OMEGA_SAMPLES, C=form.C, M=max(form.M, 1), seed=config.seed)
            return report.passed, f"supported sign {report.supported_sign.value}"

        checks.append(_run("omega_properties", omega))

    if chain is not None:
        s = form.q + 1

        def determinacy() -> tuple[Optional[bool], str]:
            h = chain.determinacy(s)
            return h >= s, f"h({s}) = {h} over {len(chain)} steps"

        checks.append(_run("determinacy", determinacy))

    def center() -> tuple[Optional[bool], str]:
        jet = center_manifold_jet(form, form.q + 2 + form.N)
        return jet.divisible, f"{len(jet.w_index)} hyperbolic coordinates, divisor x^{jet.flat_power}"

    checks.append(_run("center_manifold_divisible", center))

    if config.horn is not None and form.q > 0:
        k, C, eps = config.horn

        def basin() -> tuple[Optional[bool], str]:
            horn = HornSpec(curve=FormalCurve.zero(form.n, k), k=k, C=C, eps=eps)
            expected = 1 + unstability_index(form.D, form.bs)
            report = asyncio.run(basin_probe(FieldEvaluator.from_trs_form(form), horn, expected_dim=expected, tol=config.tol))
            return report.consistent, f"empirical {report.empirical_dim}, expected {expected}"

        checks.append(_run("basin_dimension", basin))
    return checks


def cmd_verify(config: JobConfig) -> list[Path]:
    """
    Write verify.json with one row per check.

    Failures are report content; the command itself succeeds.
    """
    payload = payload_of(load_document(config.inputs[0]))
    raw = payload.get("form", payload)
    checks = structural_checks(raw, config.cluster_tol)
    try:
        form: Optional[TRSVFForm] = TRSVFForm.model_validate(raw)
    except ValidationError as e:
        form = None
        checks.append(CheckResult(name="form", passed=False, detail=str(e.errors()[0]["msg"])))
    if form is not None:
        chain = TransformChain.model_validate(payload["chain"]) if "chain" in payload else None
        checks.extend(form_checks(form, chain, config))

    report = VerifyReport(checks=checks)
    if not report.passed:
        logger.warning(f"verify: failing checks {report.failures()}")
    path = write_artifact(
        config, "verify.json", "verify", "pass" if report.passed else "fail", report.model_dump(mode="json")
    )
    return [path]
