"""Log setup shared by the CLI and scripts."""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from .settings import get_settings


def configure_logging(level: Optional[str] = None) -> None:
    """Route the package loggers through rich on stderr, at the configured level."""
    logging.basicConfig(
        level=(level or get_settings().log_level).upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)],
        force=True,
    )
