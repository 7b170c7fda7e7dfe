import typer

from typing_extensions import Annotated

from jetflow.cli.options import (
    CapOption,
    ConfigOption,
    CsvOption,
    OrderOption,
    ParallelOption,
    VarsOption,
    VerboseOption,
)


def register_index_seq(app: typer.Typer):
    @app.command(name="index-seq")
    def index_seq(
        variables: VarsOption,
        p: OrderOption,
        F: Annotated[str, typer.Option("--F", help="Diffeomorphism components, `;` separated")],
        kmax: Annotated[int, typer.Option("--kmax", help="Largest iterate", min=1)],
        cap: CapOption = None,
        parallel: ParallelOption = False,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Fixed point indices of F^k for k = 1..kmax."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.jets import parse_diffeo
        from jetflow.runner import run_index_seq
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_index_seq(
                parse_diffeo(F, names, p),
                kmax,
                cap=cap,
                parallel=parallel,
                config=settings,
            )

        render_or_exit(build, csv)

    return index_seq
