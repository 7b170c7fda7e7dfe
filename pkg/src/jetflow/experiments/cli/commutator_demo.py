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


def register_commutator_demo(app: typer.Typer):
    @app.command(name="commutator-demo")
    def commutator_demo(
        variables: VarsOption,
        p: OrderOption,
        g1: Annotated[str, typer.Option("--g1", help="Left factor, `;` separated components")],
        g2: Annotated[str, typer.Option("--g2", help="Innermost factor, `;` separated components")],
        depth: Annotated[int, typer.Option("--depth", help="Number of commutators", min=1)] = 3,
        cap: CapOption = None,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Contact order and fixed point index of [g1, [g1, ..., [g1, g2]]]."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.jets import parse_diffeo
        from jetflow.runner import run_commutator_demo
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_commutator_demo(
                parse_diffeo(g1, names, p),
                parse_diffeo(g2, names, p),
                depth,
                cap=cap,
                config=settings,
            )

        render_or_exit(build, csv)

    return commutator_demo
