"""
Tests for the runtime settings.
"""

import pytest
from pydantic import ValidationError

from trs_flow.settings import Settings, get_settings


def test_settings_are_cached() -> None:
    assert get_settings() is get_settings()


def test_overrides_are_validated() -> None:
    settings = Settings(working_order=20, tol=1e-6)
    assert settings.working_order == 20
    assert settings.tol == 1e-6
    with pytest.raises(ValidationError):
        Settings(fuel=0)
    with pytest.raises(ValidationError):
        Settings(cluster_tol=-1.0)
