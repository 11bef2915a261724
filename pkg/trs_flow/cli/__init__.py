"""
Command line front end: reduce-linear, reduce-vf, trajectory, verify, omega-eval.
"""

from .main import namespace, program, run_job
from .models import Artifact, CheckResult, Command, JobConfig, VerifyReport

__all__ = ["Artifact", "CheckResult", "Command", "JobConfig", "VerifyReport", "namespace", "program", "run_job"]
