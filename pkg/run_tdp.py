#!/usr/bin/env python3
"""
CLI for the twisted divided power calculus.

Usage:
    python run_tdp.py qbinom --ring Zt --nmax 4 --format csv
    python run_tdp.py frob-coeffs --p 3 --nmax 2
    python run_tdp.py verify --suite sqform-assoc --ring Zt --nmax 5
    python run_tdp.py center --ring CycF:3 --degree 6 --format text
    python run_tdp.py simpson --ring CycF:2 --suite default

Exit codes: 0 success, 1 identity failures, 2 usage, 3 a divisibility
statement was falsified.
"""

import logging
import sys
from typing import Callable, NoReturn, Optional, Union

import click
from pydantic import ValidationError
from rich.console import Console

from src import __version__
from src.config import configure_logging, get_settings
from src.errors import (
    DescriptorParseError,
    DivisibilityError,
    PreconditionError,
    UnknownSuiteError,
)
from src.models import OutputFormat, RunConfig, Subcommand, TableReport, VerificationReport
from src.reporting import center_table, emit, frob_coeff_table, qbinom_table, simpson_report
from src.storage import DatabaseManager
from src.verification import available_suites, has_falsifier, run_verification

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger("run_tdp")

EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_FALSIFIER = 3

USAGE_ERRORS = (DescriptorParseError, PreconditionError, UnknownSuiteError)

Report = Union[TableReport, VerificationReport]


def run_options(fn: Callable) -> Callable:
    """Flags shared by every subcommand."""
    options = [
        click.option("--ring", default=None, help="Ring descriptor: Zt, Zts, CycF:p, CycR:p or Fp:p"),
        click.option("--nmax", type=int, default=4, show_default=True, help="Largest index n"),
        click.option("--pmax", type=int, default=5, show_default=True, help="Largest p swept by suites"),
        click.option("--p", "p", type=int, default=None, help="The prime-like order p"),
        click.option("--trunc", type=int, default=None, help="Divided power truncation"),
        click.option("--degree", type=int, default=None, help="Degree bound for bases and Higgs fields"),
        click.option("--suite", default=None, help="Suite name"),
        click.option(
            "--format", "fmt",
            type=click.Choice([f.value for f in OutputFormat]),
            default=OutputFormat.JSON.value,
            show_default=True,
        ),
        click.option("--seed", type=int, default=None, help="Seed for randomized suites"),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout"),
        click.option("--record", is_flag=True, help="Record verification reports in DuckDB"),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def build_config(subcommand: Subcommand, **options) -> RunConfig:
    """RunConfig from parsed flags, filling unset values from settings."""
    settings = get_settings()
    fmt = options.pop("fmt")
    if options.get("seed") is None:
        options["seed"] = settings.default_seed
    if options.get("trunc") is None:
        options["trunc"] = settings.default_trunc
    if options.get("degree") is None:
        options["degree"] = settings.default_degree
    return RunConfig(subcommand=subcommand, format=OutputFormat(fmt), **options)


def _usage_error(message: str) -> NoReturn:
    err_console.print(f"[red]✗ usage:[/red] {message}")
    sys.exit(EXIT_USAGE)


def _record(report: VerificationReport) -> None:
    db = DatabaseManager()
    try:
        db.init_schema()
        run_id = db.insert_verification_run(report)
    finally:
        db.close()
    err_console.print(f"[dim]recorded run {run_id}[/dim]")


def execute(subcommand: Subcommand, build: Callable[[RunConfig], Report], options: dict) -> None:
    """Validate, build, emit, then exit with the code the report calls for."""
    try:
        config = build_config(subcommand, **options)
    except ValidationError as exc:
        _usage_error("; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors()))
    except DescriptorParseError as exc:
        _usage_error(str(exc))

    try:
        report = build(config)
    except DivisibilityError as exc:
        err_console.print(f"[red]✗ falsified:[/red] {exc}")
        sys.exit(EXIT_FALSIFIER)
    except USAGE_ERRORS as exc:
        _usage_error(str(exc))

    logger.debug("%s %s", subcommand.value, config.params())
    emit(report, config.format, config.out, console)
    if not isinstance(report, VerificationReport):
        return
    if config.record:
        _record(report)
    if has_falsifier(report):
        sys.exit(EXIT_FALSIFIER)
    if not report.ok:
        err_console.print(f"[red]✗[/red] {report.failures} of {len(report.cases)} cases failed")
        sys.exit(EXIT_FAILURES)


def _frob_coeffs(config: RunConfig) -> TableReport:
    if not get_settings().use_coefficient_cache:
        return frob_coeff_table(config)
    db = DatabaseManager()
    try:
        db.init_schema()
        return frob_coeff_table(config, db)
    finally:
        db.close()


def _verify(config: RunConfig) -> VerificationReport:
    if config.suite is None:
        raise UnknownSuiteError(f"verify needs --suite; available: {', '.join(available_suites())}")
    return run_verification(config)


def subcommand(name: Subcommand, build: Callable[[RunConfig], Report], help_text: str) -> click.Command:
    @run_options
    def command(**options):
        execute(name, build, options)

    command.__doc__ = help_text
    return click.command(name.value)(command)


@click.group()
@click.version_option(__version__)
@click.option("--log-level", default=None, help="Logging level (defaults to TDP_LOG_LEVEL)")
def cli(log_level: Optional[str]) -> None:
    """Twisted divided powers: tables, identity suites and the Simpson roundtrip."""
    configure_logging(log_level)


cli.add_command(subcommand(Subcommand.QBINOM, qbinom_table, "Print {n, k}_q for k <= n <= nmax."))
cli.add_command(subcommand(Subcommand.FROB_COEFFS, _frob_coeffs, "Print the A, B and C coefficient tables at --p."))
cli.add_command(subcommand(Subcommand.VERIFY, _verify, "Run a named identity suite and report every case."))
cli.add_command(subcommand(Subcommand.CENTER, center_table, "Print bases of the centralizer of x and of the center."))
cli.add_command(subcommand(Subcommand.SIMPSON, simpson_report, "Run the Higgs to q-difference roundtrip on --ring."))


@cli.command("suites")
def list_suites() -> None:
    """List the registered verification suites."""
    for name in available_suites():
        console.print(name)


if __name__ == "__main__":
    cli()
