"""Core: configuration, logging and errors."""

from .config import CountingLimits, GraphtopySettings, limits, settings
from .errors import (
    ConsistencyError,
    Diagnostic,
    DisconnectedGraphError,
    FlavorMismatchError,
    GeneratorMismatchError,
    GraphtopyError,
    InputFormatError,
    InvalidActionError,
    InvalidGraphError,
    InvalidParameterError,
    LoopsPresentError,
    NotACoveringError,
    UnknownGraphKindError,
)
from .logging import get_logger, setup_logging

__all__ = [
    "GraphtopySettings",
    "CountingLimits",
    "settings",
    "limits",
    "get_logger",
    "setup_logging",
    "GraphtopyError",
    "InvalidGraphError",
    "UnknownGraphKindError",
    "InvalidParameterError",
    "FlavorMismatchError",
    "LoopsPresentError",
    "NotACoveringError",
    "GeneratorMismatchError",
    "InvalidActionError",
    "ConsistencyError",
    "InputFormatError",
    "DisconnectedGraphError",
    "Diagnostic",
]
