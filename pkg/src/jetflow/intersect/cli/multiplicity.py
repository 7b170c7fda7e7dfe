import typer

from typing_extensions import Annotated

from jetflow.cli.options import (
    CapOption,
    ConfigOption,
    CsvOption,
    OrderOption,
    VarsOption,
    VerboseOption,
)


def register_multiplicity(app: typer.Typer):
    @app.command(name="multiplicity")
    def multiplicity(
        variables: VarsOption,
        p: OrderOption,
        V: Annotated[str, typer.Option("--V", help="Generators of I_V, `;` separated")],
        W: Annotated[str, typer.Option("--W", help="Generators of I_W, `;` separated")],
        cap: CapOption = None,
        check: Annotated[
            bool,
            typer.Option("--check", help="Compare with the brute force quotient dimension"),
        ] = False,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Intersection multiplicity of two germs given by their ideals."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.intersect import parse_ideal
        from jetflow.runner import run_multiplicity
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_multiplicity(
                parse_ideal(V, names, p),
                parse_ideal(W, names, p),
                cap=cap,
                check=check,
                config=settings,
            )

        render_or_exit(build, csv)

    return multiplicity
