"""Storage layer using DuckDB."""

from .db import DatabaseManager

__all__ = ["DatabaseManager"]
