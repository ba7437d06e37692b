"""
Relatórios de experimentos: schemas e serialização JSON/CSV.
"""

from .schemas import StatReport, UncertaintyReport, RunConfig, reports_to_rows
from .writers import render_json, render_csv, write_text

__all__ = [
    "StatReport",
    "UncertaintyReport",
    "RunConfig",
    "reports_to_rows",
    "render_json",
    "render_csv",
    "write_text",
]
