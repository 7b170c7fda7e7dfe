import typer

from fractions import Fraction
from typing_extensions import Annotated

from jetflow.cli.options import (
    ConfigOption,
    CsvOption,
    OrderOption,
    VarsOption,
    VerboseOption,
)


def register_flow(app: typer.Typer):
    @app.command(name="flow")
    def flow(
        variables: VarsOption,
        p: OrderOption,
        X: Annotated[str, typer.Option("--X", help="Vector field components, `;` separated")],
        t: Annotated[
            str | None, typer.Option("--t", help="Evaluate numerically at this time, e.g. `1/2`")
        ] = None,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Closed form of the flow operator e^(tA) of a vector field."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.errors import ParseError
        from jetflow.jets import parse_vector_field
        from jetflow.runner import run_flow
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            try:
                time = None if t is None else Fraction(t)
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"`{t}` is not a rational time", position=0) from e
            return run_flow(parse_vector_field(X, names, p), time, names, config=settings)

        render_or_exit(build, csv)

    return flow
