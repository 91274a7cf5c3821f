"""Console utilities with rich formatting.

Reports go to stdout; status and error lines go to stderr so that stdout
stays identical across runs.
"""

from __future__ import annotations

from rich.console import Console
from rich.table import Table

# Global console instances
console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)


def print_error(message: str) -> None:
    """Print error message in red."""
    err_console.print(f"❌ {message}", style="bold red", markup=False)


def print_verdict(label: str, value: bool) -> None:
    """Print a decision as `label: true|false`."""
    console.print(f"{label}: {str(value).lower()}", markup=False)


def print_json(payload: str) -> None:
    """Write a JSON document verbatim, one line."""
    console.out(payload, highlight=False)


def create_table(title: str, columns: list[str]) -> Table:
    """Create a formatted table.

    Args:
        title: Table title
        columns: Column names

    Returns:
        Rich Table instance
    """
    table = Table(title=title, show_header=True, header_style="bold magenta")
    for col in columns:
        table.add_column(col)
    return table
