import typer

from jetflow.cli.options import (
    ConfigOption,
    CsvOption,
    GroupOption,
    OrderOption,
    VarsOption,
    VerboseOption,
)


def register_linearize(app: typer.Typer):
    @app.command(name="linearize")
    def linearize(
        variables: VarsOption,
        p: OrderOption,
        group: GroupOption,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Bochner's averaged coordinates linearizing a finite group action."""
        from jetflow.cli.utils import parse_group, render_or_exit, setup
        from jetflow.runner import run_linearize
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_linearize(parse_group(group, names, p), names, config=settings)

        render_or_exit(build, csv)

    return linearize
