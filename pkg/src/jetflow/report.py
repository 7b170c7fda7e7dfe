"""
Tables shared by every command: a rich table for people, CSV for scripts.
"""

from __future__ import annotations

import typer

from pydantic import BaseModel
from rich import print as rprint
from rich.table import Table


class Report(BaseModel):
    """
    Rows of a command's output. The last header column is the `tag`
    (`exact` or `numeric`); notes and warnings only show in table mode.
    """

    title: str
    header: list[str]
    rows: list[list[str]] = []
    notes: list[str] = []
    warnings: list[str] = []

    def add_row(self, *values: object) -> None:
        self.rows.append([str(value) for value in values])

    def csv(self) -> str:
        lines = [",".join(self.header)]
        lines.extend(",".join(row) for row in self.rows)
        return "\n".join(lines)


def render_report(report: Report, csv: bool = False) -> None:
    if csv:
        typer.echo(report.csv())
        return

    table = Table(title=report.title)
    for column in report.header:
        table.add_column(column)
    for row in report.rows:
        table.add_row(*row)
    rprint(table)

    for note in report.notes:
        rprint(f"✅ {note}")
    for warning in report.warnings:
        rprint(f"⚠️  [yellow]{warning}[/yellow]")
