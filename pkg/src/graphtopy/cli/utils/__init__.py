"""CLI utilities."""

from .console import (
    console,
    create_table,
    err_console,
    print_error,
    print_json,
    print_verdict,
)

__all__ = [
    "console",
    "err_console",
    "print_error",
    "print_verdict",
    "print_json",
    "create_table",
]
