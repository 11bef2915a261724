"""
Runtime settings.
Defaults come from TRS_FLOW_* environment variables; command-line flags
override them per job.
"""

import os
from functools import lru_cache

from pydantic import BaseModel, Field


class Settings(BaseModel):
    """Library-wide defaults."""

    working_order: int = Field(default=int(os.getenv("TRS_FLOW_WORKING_ORDER", "12")), ge=1)
    fuel: int = Field(default=int(os.getenv("TRS_FLOW_FUEL", "16")), ge=1)
    cluster_tol: float = Field(default=float(os.getenv("TRS_FLOW_CLUSTER_TOL", "1e-9")), gt=0)
    tol: float = Field(default=float(os.getenv("TRS_FLOW_TOL", "1e-10")), gt=0)
    stiffness_budget: int = Field(default=int(os.getenv("TRS_FLOW_STIFFNESS_BUDGET", "20000")), ge=1)
    seed: int = Field(default=int(os.getenv("TRS_FLOW_SEED", "0")))
    log_level: str = Field(default=os.getenv("TRS_FLOW_LOG_LEVEL", "INFO"))


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
