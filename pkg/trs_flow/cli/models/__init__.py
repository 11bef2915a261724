from .artifact import Artifact, CheckResult, VerifyReport
from .job_config import Command, JobConfig

__all__ = ["Artifact", "CheckResult", "Command", "JobConfig", "VerifyReport"]
