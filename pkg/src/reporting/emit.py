"""Render tables and reports as JSON, CSV or a rich text table.

Polynomials are dense little-endian integer lists in every format; in CSV
a flat coefficient list is spread over the trailing columns of its row.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, List, Optional, Union

from rich.console import Console
from rich.table import Table

from ..models import OutputFormat, TableReport, VerificationReport

Report = Union[TableReport, VerificationReport]


def _columns(report: Report) -> List[str]:
    if isinstance(report, TableReport):
        return report.columns
    return ["key", "passed", "detail"]


def _rows(report: Report) -> List[dict]:
    if isinstance(report, TableReport):
        return report.rows
    return [c.model_dump(mode="json") for c in report.cases]


def _is_flat(value: Any) -> bool:
    return isinstance(value, list) and all(isinstance(v, (int, str)) for v in value)


def _csv_cells(row: dict, columns: List[str]) -> List[Any]:
    cells: List[Any] = []
    for i, col in enumerate(columns):
        value = row.get(col, "")
        if i == len(columns) - 1 and _is_flat(value):
            cells.extend(value)
        elif isinstance(value, (list, dict)):
            cells.append(json.dumps(value))
        else:
            cells.append(value)
    return cells


def _to_csv(report: Report) -> str:
    columns = _columns(report)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in _rows(report):
        writer.writerow(_csv_cells(row, columns))
    return buffer.getvalue()


def _cell_text(value: Any) -> str:
    if _is_flat(value):
        return ",".join(str(v) for v in value)
    if isinstance(value, bool):
        return "[green]pass[/green]" if value else "[red]FAIL[/red]"
    return str(value)


def _to_rich(report: Report) -> Table:
    if isinstance(report, TableReport):
        title = report.name
    else:
        title = f"{report.suite}: {len(report.cases)} cases, {report.failures} failures"
    table = Table(title=title, show_header=True, header_style="bold magenta")
    for i, col in enumerate(_columns(report)):
        table.add_column(col, style="cyan" if i == 0 else None)
    for row in _rows(report):
        table.add_row(*(_cell_text(row.get(col, "")) for col in _columns(report)))
    return table


def render(report: Report, fmt: OutputFormat) -> str:
    """The report as text in the requested format."""
    if fmt is OutputFormat.JSON:
        return json.dumps(report.summary(), indent=2) + "\n"
    if fmt is OutputFormat.CSV:
        return _to_csv(report)
    buffer = io.StringIO()
    Console(file=buffer, width=120, force_terminal=False).print(_to_rich(report))
    return buffer.getvalue()


def emit(report: Report, fmt: OutputFormat, out: Optional[Path] = None, console: Optional[Console] = None) -> None:
    """Write the report to ``out``, or to the console when no path is given."""
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(render(report, fmt), encoding="utf-8")
        return
    console = console or Console()
    if fmt is OutputFormat.TEXT:
        console.print(_to_rich(report))
    else:
        console.out(render(report, fmt), end="", highlight=False)
