"""
Artifact models.
Files written by the command line: the job config, a verdict and a payload.
"""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from .job_config import JobConfig


class Artifact(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str = Field(description="What the payload holds, e.g. 'chain' or 'vf_form'")
    verdict: str = Field(description="Short outcome, e.g. 'trs', 'regular', 'pass'")
    config: JobConfig = Field(description="Effective job configuration")
    payload: dict[str, Any] = Field(default_factory=dict)


class CheckResult(BaseModel):
    """One row of the verify matrix; passed is None when the check does not apply."""

    model_config = ConfigDict(frozen=True)

    name: str
    passed: Optional[bool] = None
    detail: str = ""


class VerifyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if c.passed is False]
