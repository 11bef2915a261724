"""Tests for tasks module (invoke tasks)."""

from unittest.mock import MagicMock, call

from invoke import Context

import tasks


def test_demo_task_chains_commands() -> None:
    """The demo task reduces, then verifies and shoots along the written form."""
    mock_context = MagicMock(spec=Context)

    tasks.demo(mock_context, "couple.json", out="runs")

    assert mock_context.run.call_args_list == [
        call("trs-flow reduce-vf couple.json --out runs", pty=True),
        call("trs-flow verify runs/form.json --out runs", pty=True),
        call("trs-flow trajectory runs/form.json --out runs", pty=True),
    ]


def test_test_task_default() -> None:
    """Test the test task with default parameters."""
    mock_context = MagicMock(spec=Context)

    tasks.test(mock_context)

    call_args = mock_context.run.call_args[0][0]
    assert "python -m pytest" in call_args
    assert "--cov=trs_flow" in call_args
    assert "--cov-branch" in call_args


def test_test_task_keyword_without_coverage() -> None:
    mock_context = MagicMock(spec=Context)

    tasks.test(mock_context, path="tests/test_cli", keyword="omega", coverage=False)

    command = mock_context.run.call_args[0][0]
    assert command.startswith("python -m pytest tests/test_cli")
    assert "--cov" not in command
    assert command.endswith("-k omega")


def test_mypy_task_defaults_to_package() -> None:
    mock_context = MagicMock(spec=Context)

    tasks.mypy(mock_context)

    mock_context.run.assert_called_once_with("poetry run mypy trs_flow --explicit-package-bases")


def test_test_task_log_file_named_after_path() -> None:
    mock_context = MagicMock(spec=Context)

    tasks.test(mock_context, path="tests/test_cli", log=True, coverage=False)

    mock_context.run.assert_called_once_with("python -m pytest tests/test_cli > test_tests_test_cli.log", pty=True)


def test_check_runs_mypy_then_ruff() -> None:
    mock_context = MagicMock(spec=Context)

    tasks.check(mock_context)

    assert [c.args[0] for c in mock_context.run.call_args_list] == [
        "poetry run mypy trs_flow --explicit-package-bases",
        "poetry run ruff check trs_flow",
    ]
