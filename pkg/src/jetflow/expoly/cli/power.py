import typer

from typing_extensions import Annotated

from jetflow.cli.options import (
    ConfigOption,
    CsvOption,
    OrderOption,
    VarsOption,
    VerboseOption,
)


def register_power(app: typer.Typer):
    @app.command(name="power")
    def power(
        variables: VarsOption,
        p: OrderOption,
        F: Annotated[str, typer.Option("--F", help="Diffeomorphism components, `;` separated")],
        t: Annotated[
            int | None, typer.Option("--t", help="Evaluate exactly at this integer")
        ] = None,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Closed form of the power operator A^t of a diffeomorphism."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.jets import parse_diffeo
        from jetflow.runner import run_power
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_power(parse_diffeo(F, names, p), t, names, config=settings)

        render_or_exit(build, csv)

    return power
