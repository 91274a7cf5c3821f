"""
Tests for graphtopy.core.logging module.
"""

import json
from unittest.mock import MagicMock

from graphtopy.core.logging import (
    clear_logging_context,
    get_command,
    get_structured_logger,
    log_computation,
    set_command_context,
    setup_logging,
    timed,
)
from graphtopy.core.logging.logging import CommandContextProcessor


def test_setup_logging_development():
    """Test logging configuration in development mode."""
    setup_logging(log_level="DEBUG", environment="development")

    logger = get_structured_logger(__name__)
    assert hasattr(logger, "info")
    assert hasattr(logger, "error")


def test_setup_logging_production():
    """Test logging configuration in production mode."""
    setup_logging(log_level="DEBUG", environment="production")

    logger = get_structured_logger(__name__)
    assert logger is not None


def test_logs_go_to_stderr(capsys):
    """Test stdout stays clean: log lines are written to stderr only."""
    setup_logging(log_level="WARNING", enable_json=True)

    get_structured_logger("graphtopy.test").warning("Something odd", p=3)

    captured = capsys.readouterr()
    assert captured.out == ""
    line = captured.err.strip().splitlines()[-1]
    event = json.loads(line)
    assert event["event"] == "Something odd"
    assert event["p"] == 3
    assert event["service"] == "graphtopy"


def test_debug_filtered_at_warning(capsys):
    """Test debug events are dropped at the default level."""
    setup_logging(log_level="WARNING")

    get_structured_logger("graphtopy.test").debug("hidden")

    assert "hidden" not in capsys.readouterr().err


def test_command_context():
    """Test command context is set, read back and cleared."""
    set_command_context("zeta", run_id="abc123")
    assert get_command() == "zeta"

    event = CommandContextProcessor()(None, "info", {"event": "x"})
    assert event["command"] == "zeta"
    assert event["run_id"] == "abc123"

    clear_logging_context()
    assert get_command() == ""
    assert "command" not in CommandContextProcessor()(None, "info", {})


def test_log_computation_success():
    """Test successful computations are logged at debug with their details."""
    logger = MagicMock()

    log_computation(
        "enumerate_homs",
        "c_3 -> B_2",
        duration=0.5,
        details={"count": 8},
        logger=logger,
    )

    logger.debug.assert_called_once()
    kwargs = logger.debug.call_args.kwargs
    assert kwargs["operation"] == "enumerate_homs"
    assert kwargs["duration_ms"] == 500.0
    assert kwargs["count"] == 8


def test_log_computation_error():
    """Test failed computations are logged at error."""
    logger = MagicMock()

    log_computation("edge_coloring", "K_4", success=False, error="boom", logger=logger)

    logger.error.assert_called_once()
    assert logger.error.call_args.kwargs["error"] == "boom"
    assert logger.error.call_args.kwargs["success"] is False


def test_timed_measures_elapsed():
    """Test the timer records a non-negative duration."""
    with timed() as clock:
        sum(range(1000))

    assert clock.elapsed >= 0.0
