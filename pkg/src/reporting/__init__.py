"""Table builders and output emitters for the CLI."""

from .emit import emit, render
from .tables import center_table, frob_coeff_table, qbinom_table, simpson_report

__all__ = ["emit", "render", "center_table", "frob_coeff_table", "qbinom_table", "simpson_report"]
