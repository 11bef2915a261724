"""
Tests for the command line jobs, run through run_job and the invoke tasks.
"""

import json
import math
from pathlib import Path
from typing import Any, Callable
from unittest.mock import MagicMock

import pytest
from invoke import Context
from invoke.exceptions import Exit

from trs_flow.cli.main import omega_eval, reduce_linear, reduce_vf, run_job
from trs_flow.cli.models.job_config import Command
from trs_flow.linear_systems.models.linear_system import LinearSystem
from trs_flow.series_core.models.poly_matrix import PolyMatrix
from trs_flow.series_core.models.truncated_series import TruncatedSeries
from trs_flow.straightener.models.rotational_matrix import RotationalMatrix, RotationPair
from trs_flow.vf_couples.models.formal_curve import FormalCurve
from trs_flow.vf_couples.models.invariant_couple import InvariantCouple
from trs_flow.vf_couples.models.trs_vf_form import TRSVFForm

WriteInput = Callable[[str, Any], str]


def _load(path: Path) -> dict[str, Any]:
    return json.loads(path.read_text())


def test_reduce_linear_trs(write_input: WriteInput, out_dir: Path) -> None:
    system = LinearSystem(n=2, p=1, A=PolyMatrix.constant([[1, 0], [0, -1]], 4))
    paths = run_job(Command.REDUCE_LINEAR, inputs=[write_input("system.json", system)], out_dir=str(out_dir))
    assert paths == [out_dir / "chain.json", out_dir / "form.json"]
    chain, form = _load(paths[0]), _load(paths[1])
    assert chain["kind"] == "linear_chain"
    assert chain["verdict"] == "trs"
    assert chain["payload"]["chain"] == []
    assert form["payload"]["form"] is not None
    assert form["config"]["command"] == "reduce-linear"


def test_reduce_linear_regular_through_task(write_input: WriteInput, out_dir: Path) -> None:
    system = LinearSystem(n=1, p=-1, A=PolyMatrix.constant([[1]], 2))
    reduce_linear(MagicMock(spec=Context), write_input("regular.json", system), out=str(out_dir))
    form = _load(out_dir / "form.json")
    assert form["verdict"] == "regular"
    assert form["payload"]["form"] is None


def test_reduce_vf_euler_and_replay(write_input: WriteInput, out_dir: Path, euler_couple: InvariantCouple) -> None:
    couple_path = write_input("euler.json", euler_couple)
    reduce_vf(MagicMock(spec=Context), couple_path, out=str(out_dir))
    chain = _load(out_dir / "chain.json")
    form = _load(out_dir / "form.json")
    assert chain["verdict"] == "trs(1,0,0)"
    assert len(chain["payload"]["chain"]["steps"]) == 3
    assert set(form["payload"]) == {"form", "couple", "curve", "chain"}
    assert TRSVFForm.model_validate(form["payload"]["form"]).q == 1

    replay_dir = out_dir.parent / "replayed"
    run_job(Command.REDUCE_VF, inputs=[couple_path], out_dir=str(replay_dir), replay=str(out_dir / "chain.json"))
    replayed = _load(replay_dir / "form.json")
    assert replayed["verdict"] == "trs(1,0,0)"
    assert replayed["payload"]["form"] == form["payload"]["form"]


def test_reduce_vf_rejects_non_invariant_curve(
    write_input: WriteInput, out_dir: Path, euler_couple: InvariantCouple
) -> None:
    """y = x is not invariant by the Euler field."""
    diagonal = FormalCurve.make([TruncatedSeries.make([0, 1], 9)])
    couple = InvariantCouple(vf=euler_couple.vf, curve=diagonal)
    with pytest.raises(Exit) as exc_info:
        run_job(Command.REDUCE_VF, inputs=[write_input("bad.json", couple)], out_dir=str(out_dir))
    assert exc_info.value.code == 3
    assert not (out_dir / "form.json").exists()


def test_parse_failures_exit_2(write_input: WriteInput, tmp_path: Path, out_dir: Path) -> None:
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    for path in [str(broken), str(tmp_path / "missing.json"), write_input("wrong.json", {"p": 1})]:
        with pytest.raises(Exit) as exc_info:
            run_job(Command.REDUCE_LINEAR, inputs=[path], out_dir=str(out_dir))
        assert exc_info.value.code == 2


def test_non_object_document_exit_3(write_input: WriteInput, out_dir: Path) -> None:
    with pytest.raises(Exit) as exc_info:
        run_job(Command.VERIFY, inputs=[write_input("list.json", [1, 2])], out_dir=str(out_dir))
    assert exc_info.value.code == 3


def test_bad_flag_exit_2(write_input: WriteInput, scalar_form: TRSVFForm) -> None:
    with pytest.raises(Exit) as exc_info:
        run_job(Command.TRAJECTORY, inputs=[write_input("form.json", scalar_form)], window="0.3:0.1")
    assert exc_info.value.code == 2


def test_trajectory_on_axis(write_input: WriteInput, out_dir: Path, scalar_form: TRSVFForm) -> None:
    """y = 0 is invariant, so the zero seed certifies every order it is asked for."""
    paths = run_job(
        Command.TRAJECTORY,
        inputs=[write_input("form.json", scalar_form)],
        out_dir=str(out_dir),
        seed_order=4,
        window="0.01:0.3",
    )
    assert paths == [out_dir / "trajectory.csv", out_dir / "contact.json"]
    assert (out_dir / "trajectory.csv").read_text().splitlines()[0] == "x,y1"
    contact = _load(out_dir / "contact.json")
    assert contact["verdict"] == "certified"
    assert contact["payload"]["max_certified"] == 4
    assert contact["payload"]["direction"] == "backward"
    assert contact["payload"]["straightened"] is False


def test_verify_passes_on_trs_form(write_input: WriteInput, out_dir: Path, scalar_form: TRSVFForm) -> None:
    [path] = run_job(Command.VERIFY, inputs=[write_input("form.json", scalar_form)], out_dir=str(out_dir))
    report = _load(path)
    assert report["verdict"] == "pass"
    rows = {row["name"]: row for row in report["payload"]["checks"]}
    assert rows["degree"]["passed"] is True
    assert rows["unstability_index"]["detail"] == "u(D) = 1"
    assert rows["omega_properties"]["passed"] is None
    assert rows["center_manifold_divisible"]["passed"] is True


def test_verify_reports_failures(write_input: WriteInput, out_dir: Path, scalar_form: TRSVFForm) -> None:
    """D of degree q is not a TRS form; verify records it and still succeeds."""
    raw = scalar_form.model_dump(mode="json")
    raw["D"] = PolyMatrix.from_coefficients([[[1, 1]]], 1).model_dump(mode="json")
    [path] = run_job(Command.VERIFY, inputs=[write_input("raw.json", raw)], out_dir=str(out_dir))
    report = _load(path)
    assert report["verdict"] == "fail"
    rows = {row["name"]: row for row in report["payload"]["checks"]}
    assert rows["degree"]["passed"] is False
    assert rows["form"]["passed"] is False


def test_omega_eval_quarter_turn(write_input: WriteInput, out_dir: Path) -> None:
    R = RotationalMatrix(n=2, degree=0, pairs=(RotationPair(start=0, b=(1,)),))
    path = write_input("r.json", {"R": R.model_dump(mode="json"), "q": 0})
    omega_eval(MagicMock(spec=Context), path, points=f"{2 / math.pi!r},1", out=str(out_dir))
    result = _load(out_dir / "omega.json")
    assert result["verdict"] == "ok"
    first, second = result["payload"]["points"]
    assert first["angles"] == [pytest.approx(math.pi / 2)]
    assert [abs(v) for row in first["omega"] for v in row] == pytest.approx([0, 1, 1, 0], abs=1e-12)
    assert second["angles"] == [pytest.approx(1.0)]


def test_omega_eval_needs_rotation(write_input: WriteInput, out_dir: Path, scalar_form: TRSVFForm) -> None:
    with pytest.raises(Exit) as exc_info:
        run_job(Command.OMEGA_EVAL, inputs=[write_input("form.json", scalar_form)], out_dir=str(out_dir))
    assert exc_info.value.code == 3
