"""Pydantic models for run configuration and reports."""

from .report import TableReport, VerificationCase, VerificationReport
from .run import OutputFormat, RunConfig, Subcommand

__all__ = [
    "TableReport",
    "VerificationCase",
    "VerificationReport",
    "OutputFormat",
    "RunConfig",
    "Subcommand",
]
