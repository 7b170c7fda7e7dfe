import typer

from typing_extensions import Annotated

from jetflow.cli.options import (
    ConfigOption,
    CsvOption,
    OrderOption,
    VarsOption,
    VerboseOption,
)


def register_embed(app: typer.Typer):
    @app.command(name="embed")
    def embed(
        variables: VarsOption,
        p: OrderOption,
        F: Annotated[str, typer.Option("--F", help="Diffeomorphism components, `;` separated")],
        necessity: Annotated[
            int | None,
            typer.Option("--necessity", help="Also show that k' < k admits no field"),
        ] = None,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Vector field V with e^V = F^k for the torsion order k."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.jets import parse_diffeo
        from jetflow.runner import run_embed
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_embed(parse_diffeo(F, names, p), necessity, names, config=settings)

        render_or_exit(build, csv)

    return embed
