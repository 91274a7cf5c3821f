"""
graphtopy logging

Structured logging (structlog) plus stdlib logging with colour output.
Everything is written to stderr: stdout is reserved for reports so that
repeated runs stay byte-identical.
"""

import logging
import sys
import time
from contextvars import ContextVar
from typing import Optional

import structlog

try:
    import colorlog

    HAS_COLORLOG = True
except ImportError:
    HAS_COLORLOG = False


# =============================================================================
# Context Variables
# =============================================================================

command_var: ContextVar[str] = ContextVar("command", default="")
run_id_var: ContextVar[str] = ContextVar("run_id", default="")


# =============================================================================
# Structured Logging Processors
# =============================================================================


class ServiceNameProcessor:
    """Inject service name into log events"""

    def __init__(self, service_name: str):
        self.service_name = service_name

    def __call__(self, logger, method_name, event_dict):
        event_dict["service"] = self.service_name
        return event_dict


class CommandContextProcessor:
    """Inject CLI command and run id into log events"""

    def __call__(self, logger, method_name, event_dict):
        command = command_var.get()
        run_id = run_id_var.get()

        if command:
            event_dict["command"] = command

        if run_id:
            event_dict["run_id"] = run_id

        return event_dict


# =============================================================================
# Structured Logging Configuration
# =============================================================================


def configure_structured_logging(
    service_name: str,
    log_level: str = "WARNING",
    enable_json: bool = False,
):
    """
    Configure structlog-based logging

    Args:
        service_name: Service identifier
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        enable_json: Enable JSON output
    """
    processors = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.TimeStamper(fmt="ISO"),
        structlog.processors.add_log_level,
        ServiceNameProcessor(service_name),
        CommandContextProcessor(),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
    ]

    if enable_json:
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(
            getattr(logging, log_level.upper())
        ),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def get_structured_logger(name: str):
    """
    Get a structured logger instance

    Args:
        name: Logger name (typically __name__)
    """
    return structlog.get_logger(name)


# =============================================================================
# Context Management
# =============================================================================


def set_command_context(command: str, run_id: str = "") -> None:
    """Bind CLI command (and optional run id) to the current context"""
    command_var.set(command)
    run_id_var.set(run_id)
    structlog.contextvars.bind_contextvars(command=command)
    if run_id:
        structlog.contextvars.bind_contextvars(run_id=run_id)


def get_command() -> str:
    """Get current CLI command"""
    return command_var.get()


def clear_logging_context() -> None:
    """Clear all logging context variables"""
    command_var.set("")
    run_id_var.set("")
    structlog.contextvars.clear_contextvars()


# =============================================================================
# Convenience Logging Functions
# =============================================================================


def log_computation(
    operation: str,
    subject: str,
    success: bool = True,
    duration: Optional[float] = None,
    error: Optional[str] = None,
    details: Optional[dict] = None,
    logger=None,
) -> None:
    """
    Log an exact computation (enumeration, determinant, search)

    Args:
        operation: Operation name (e.g., "enumerate_homs", "find_n_coloring")
        subject: What it ran on (graph or action description)
        success: Whether the computation succeeded
        duration: Duration in seconds (optional)
        error: Error message if failed
        details: Additional fields (sizes, verdicts)
        logger: Optional logger instance
    """
    if logger is None:
        logger = get_structured_logger("computation")

    log_data = {
        "operation": operation,
        "subject": subject,
        "success": success,
    }

    if duration is not None:
        log_data["duration_ms"] = round(duration * 1000, 2)

    if details:
        log_data.update(details)

    if error:
        logger.error("Computation failed", error=error, **log_data)
    else:
        logger.debug("Computation completed", **log_data)


class timed:
    """Context manager measuring wall time for log_computation."""

    def __enter__(self) -> "timed":
        self.start = time.perf_counter()
        self.elapsed = 0.0
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed = time.perf_counter() - self.start


# =============================================================================
# Traditional Logging Configuration
# =============================================================================


def setup_traditional_logging(log_level: str = "WARNING") -> None:
    """
    Configure stdlib console logging on stderr

    Args:
        log_level: Logging level for the root logger
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, log_level.upper()))

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    if HAS_COLORLOG:
        color_format = (
            "%(log_color)s%(asctime)s%(reset)s | "
            "%(log_color)s%(levelname)-8s%(reset)s | "
            "%(cyan)s%(name)-30s%(reset)s | "
            "%(message)s"
        )
        console_formatter = colorlog.ColoredFormatter(
            color_format,
            datefmt="%H:%M:%S",
            log_colors={
                "DEBUG": "blue",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "red,bg_white",
            },
        )
    else:
        log_format = "%(asctime)s | %(levelname)-8s | %(name)-30s | %(message)s"
        console_formatter = logging.Formatter(log_format, datefmt="%H:%M:%S")

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG)
    console_handler.setFormatter(console_formatter)
    root_logger.addHandler(console_handler)

    # sympy / networkx are quiet by default; keep it that way
    for name in ("sympy", "networkx"):
        logging.getLogger(name).setLevel(logging.WARNING)


# =============================================================================
# Unified Setup (Recommended)
# =============================================================================


def setup_logging(
    service_name: str = "graphtopy",
    log_level: str = "WARNING",
    environment: str = "development",
    enable_json: bool = False,
) -> None:
    """
    Configure the logging system (recommended entry point)

    Args:
        service_name: Identifier for log tagging
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        environment: Runtime environment (development, production)
        enable_json: Enable JSON output (auto-enabled for production)

    Example:
        >>> from graphtopy.core.logging import setup_logging
        >>> setup_logging(log_level="DEBUG")
    """
    if environment == "production":
        enable_json = True
        if log_level == "DEBUG":
            log_level = "INFO"

    setup_traditional_logging(log_level=log_level)

    configure_structured_logging(
        service_name=service_name,
        log_level=log_level,
        enable_json=enable_json,
    )

    logger = get_structured_logger(__name__)
    logger.debug(
        "Logging system initialized",
        service=service_name,
        environment=environment,
        log_level=log_level,
        json_output=enable_json,
    )


# =============================================================================
# Public API
# =============================================================================

get_logger = get_structured_logger

__all__ = [
    "setup_logging",
    "get_logger",
    "get_structured_logger",
    "set_command_context",
    "get_command",
    "clear_logging_context",
    "log_computation",
    "timed",
]
