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


def register_mu_seq(app: typer.Typer):
    @app.command(name="mu-seq")
    def mu_seq(
        variables: VarsOption,
        p: OrderOption,
        F: Annotated[str, typer.Option("--F", help="Diffeomorphism components, `;` separated")],
        V: Annotated[str, typer.Option("--V", help="Generators of I_V, `;` separated")],
        W: Annotated[str, typer.Option("--W", help="Generators of I_W, `;` separated")],
        kmax: Annotated[int, typer.Option("--kmax", help="Largest iterate", min=0)],
        cap: CapOption = None,
        parallel: ParallelOption = False,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Multiplicities (F^k* V, W) for k = 0..kmax."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.intersect import parse_ideal
        from jetflow.jets import parse_diffeo
        from jetflow.runner import run_mu_seq
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_mu_seq(
                parse_diffeo(F, names, p),
                parse_ideal(V, names, p),
                parse_ideal(W, names, p),
                kmax,
                cap=cap,
                parallel=parallel,
                config=settings,
            )

        render_or_exit(build, csv)

    return mu_seq
