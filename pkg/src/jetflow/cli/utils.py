import typer

from typing import Callable
from rich import print as rprint
from rich.markup import escape

from jetflow.config import JetflowConfig, resolve_config
from jetflow.errors import JetflowError
from jetflow.report import Report, render_report
from jetflow.utils import configure_logging

from .options import ConfigOption, VerboseOption


def setup(verbose: VerboseOption = False, config: ConfigOption = None) -> JetflowConfig:
    """
    Configures logging and loads `--config`, `./jetflow.json` or the defaults.
    """
    configure_logging(verbose)
    try:
        return resolve_config(config)
    except FileNotFoundError as e:
        rprint(f"❌ [red]{escape(str(e))}[/red]")
        raise typer.Exit(code=1)


def print_error(error: JetflowError) -> None:
    rprint(f"❌ [red]{error.code}: {escape(str(error))}[/red]")


def render_or_exit(build: Callable[[], Report], csv: bool = False) -> None:
    """Renders the report, or prints the failed precondition and exits with 1."""
    try:
        report = build()
    except JetflowError as e:
        print_error(e)
        raise typer.Exit(code=1)
    render_report(report, csv)


def parse_group(text: str, names: list[str], order: int):
    from jetflow.jets import FiniteGroupAction, parse_diffeo

    generators = [parse_diffeo(part, names, order) for part in text.split("|")]
    return FiniteGroupAction.generate(generators)
