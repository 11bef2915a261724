from invoke import task, Context
import sys
from pathlib import Path

# Add the workspace to sys.path so tasks can import trs_flow
workspace_dir = Path(__file__).parent
if str(workspace_dir) not in sys.path:
    sys.path.insert(0, str(workspace_dir))

COVERAGE_FLAGS = "--cov=trs_flow --cov-branch --cov-report=term-missing"


def _redirect(prefix: str, path: str, default_path: str = "") -> str:
    """' > <prefix>.log', or ' > <prefix>_<path>.log' when a specific path is checked."""
    if path and path != default_path:
        path_safe = path.replace("/", "_").replace(".", "_")
        return f" > {prefix}_{path_safe}.log"
    return f" > {prefix}.log"


@task
def demo(c: Context, path: str, out: str = "out"):
    """Reduce a couple file, then verify and shoot along the resulting form."""
    c.run(f"trs-flow reduce-vf {path} --out {out}", pty=True)
    c.run(f"trs-flow verify {out}/form.json --out {out}", pty=True)
    c.run(f"trs-flow trajectory {out}/form.json --out {out}", pty=True)


@task
def test(c: Context, path: str = "", verbose: bool = False, log: bool = False, keyword: str | None = None, coverage: bool = True):
    """
    Run the test suite with pytest.
    Parameters:
    path: optional, specific test file or directory.
    verbose: optional, run pytest in verbose mode.
    log: optional, redirect output to test.log (or test_<path>.log).
    keyword: optional, run tests matching the keyword expression.
    coverage: optional, if True (default), report coverage of trs_flow.
    """
    command = f"python -m pytest {path}".strip()
    if coverage:
        command += f" {COVERAGE_FLAGS} --cov-report=html --cov-report=xml"
    if keyword:
        command += f" -k {keyword}"
    if verbose:
        command += " -vv"
    if log:
        command += _redirect("test", path)
    c.run(command, pty=True)


@task
def coverage(c: Context, path: str = "", html: bool = True, xml: bool = True):
    """
    Run the suite and write coverage reports.
    Parameters:
    path: optional, specific test file or directory.
    html: optional, if True (default), write htmlcov/.
    xml: optional, if True (default), write coverage.xml.
    """
    command = f"python -m pytest {path} {COVERAGE_FLAGS}".replace("  ", " ")
    if html:
        command += " --cov-report=html"
    if xml:
        command += " --cov-report=xml"
    c.run(command, pty=True)
    if html:
        print("\nHTML coverage report generated in htmlcov/index.html")


@task
def mypy(c: Context, path: str = "trs_flow", log: bool = False):
    """Type-check the package (or a given path) with mypy."""
    command = f"poetry run mypy {path} --explicit-package-bases"
    if log:
        command += _redirect("mypy", path, "trs_flow")
    c.run(command)


@task
def ruff_check(c: Context, path: str = ".", log: bool = False):
    """Lint with ruff."""
    command = f"poetry run ruff check {path}"
    if log:
        command += _redirect("ruff_check", path, ".")
    c.run(command)


@task
def ruff_fix(c: Context, path: str = ".", log: bool = False):
    """Lint with ruff and apply its fixes."""
    command = f"poetry run ruff check {path} --fix"
    if log:
        command += _redirect("ruff_fix", path, ".")
    c.run(command)


@task
def check(c: Context, path: str = "trs_flow", log: bool = False):
    """
    Run all code quality checks (mypy and ruff).
    Parameters:
    path: optional, path to check (default: trs_flow).
    log: optional, redirect output to log files.
    """
    print(f"Running mypy type checking on {path}...")
    mypy(c, path, log)
    print(f"Running ruff code quality checks on {path}...")
    ruff_check(c, path, log)
    print("All quality checks completed.")
