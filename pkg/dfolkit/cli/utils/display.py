"""Display utilities for CLI output.

Reports go to standard output; errors, warnings and spinners go to standard
error so that ``--json`` output stays machine-readable.
"""

import json
from contextlib import contextmanager
from typing import Any, Iterator

from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.text import Text

from dfolkit.cli.utils.formatting import (
    derivation_tree,
    details_table,
    format_value,
    get_color,
    laws_table,
)
from dfolkit.types import CommandReport

console = Console()
err_console = Console(stderr=True)


def print_error(message: str) -> None:
    err_console.print(f"[{get_color('error')}]Error:[/] {message}", highlight=False)


def print_warning(message: str) -> None:
    err_console.print(f"[{get_color('warning')}]Warning:[/] {message}", highlight=False)


def print_success(message: str) -> None:
    console.print(f"[{get_color('success')}]✓[/] {message}", highlight=False)


@contextmanager
def progress(message: str, spinner: str = "dots") -> Iterator[None]:
    """Show a transient spinner on standard error while the block runs."""
    with Progress(
        SpinnerColumn(spinner_name=spinner),
        TextColumn("[progress.description]{task.description}"),
        console=err_console,
        transient=True,
    ) as bar:
        bar.add_task(message, total=None)
        yield


def emit_json(data: Any) -> None:
    """Stable JSON: keys sorted, two-space indent."""
    print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False))


def show_report(report: CommandReport, as_json: bool = False) -> None:
    if as_json:
        emit_json(report.to_dict())
        return
    if report.document is not None:
        console.print(Text(report.document.rstrip("\n")))
    if report.details:
        console.print(details_table(report.command, report.details))
    derivation = report.details.get("derivation")
    if isinstance(derivation, dict):
        console.print(derivation_tree(derivation))
    for suite in report.details.get("suites", []):
        console.print(laws_table(f"{suite['suite']} laws (size {suite['size']})", suite["laws"]))
    if report.error is not None:
        lines = [report.error.get("message", "")] + [
            f"{key}: {format_value(value)}"
            for key, value in sorted(report.error.items())
            if key not in ("error", "message") and value not in (None, [])
        ]
        console.print(
            Panel(
                Text("\n".join(lines)),
                title=f"[bold {get_color('error')}]{report.error.get('error', 'error')}[/]",
                title_align="left",
                border_style=get_color("error"),
            )
        )
    elif report.ok:
        print_success(f"{report.command}: ok")
    else:
        print_error(f"{report.command}: failed")
