import typer

from pathlib import Path
from rich import print as rprint
from typing_extensions import Annotated

from jetflow.cli.options import ConfigOption, CsvOption, VerboseOption


def register_run(app: typer.Typer):
    @app.command(name="run")
    def run(
        path: Annotated[
            Path, typer.Argument(help="Problem file (.jet) or name of a bundled fixture")
        ],
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Execute the command of a problem file."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.problem import fixture_path
        from jetflow.runner import run_problem

        settings = setup(verbose, config)
        if not path.exists():
            try:
                path = fixture_path(str(path))
            except FileNotFoundError as e:
                rprint(f"❌ [red]Problem file `{path}` not found. {e}[/red]")
                raise typer.Exit(code=1)

        render_or_exit(lambda: run_problem(path, settings), csv)

    return run
