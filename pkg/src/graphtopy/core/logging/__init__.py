from .logging import (
    clear_logging_context,
    get_command,
    get_logger,
    get_structured_logger,
    log_computation,
    set_command_context,
    setup_logging,
    timed,
)

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
