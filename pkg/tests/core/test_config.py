"""
Tests for graphtopy.core.config module.
"""

import pytest
from pydantic import ValidationError

from graphtopy.core.config import CountingLimits, GraphtopySettings


def test_settings_defaults():
    """Test default settings keep logging quiet."""
    settings = GraphtopySettings()

    assert settings.PROJECT_NAME == "graphtopy"
    assert settings.ENVIRONMENT == "development"
    assert settings.DEBUG is False
    assert settings.log_level == "WARNING"


def test_settings_debug_from_environment(monkeypatch):
    """Test GRAPHTOPY_DEBUG raises the log level to DEBUG."""
    monkeypatch.setenv("GRAPHTOPY_DEBUG", "true")

    settings = GraphtopySettings()

    assert settings.DEBUG is True
    assert settings.log_level == "DEBUG"


def test_settings_production_ignores_debug(monkeypatch):
    """Test production always logs at WARNING."""
    monkeypatch.setenv("GRAPHTOPY_ENVIRONMENT", "production")
    monkeypatch.setenv("GRAPHTOPY_DEBUG", "true")

    assert GraphtopySettings().log_level == "WARNING"


def test_counting_limits_defaults():
    """Test the default truncation bounds."""
    limits = CountingLimits()

    assert limits.TRUNCATION_ORDER == 8
    assert limits.CYCLE_BOUND == 8
    assert limits.FOREST_DEPTH == 1
    assert limits.OUTPUT_FORMAT == "text"


def test_counting_limits_ignore_environment(monkeypatch):
    """Test bounds never come from the environment."""
    monkeypatch.setenv("GRAPHTOPY_TRUNCATION_ORDER", "3")
    monkeypatch.setenv("TRUNCATION_ORDER", "3")

    assert CountingLimits().TRUNCATION_ORDER == 8


@pytest.mark.parametrize("field", ["TRUNCATION_ORDER", "CYCLE_BOUND", "FOREST_DEPTH"])
def test_counting_limits_reject_nonpositive(field):
    """Test every bound must be at least one."""
    with pytest.raises(ValidationError, match=field):
        CountingLimits(**{field: 0})


def test_counting_limits_frozen():
    """Test limits cannot be changed after construction."""
    limits = CountingLimits()

    with pytest.raises(ValidationError):
        limits.TRUNCATION_ORDER = 4  # type: ignore[misc]
