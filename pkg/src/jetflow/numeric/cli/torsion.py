import typer

from typing_extensions import Annotated

from jetflow.cli.options import ConfigOption, CsvOption, VerboseOption


def register_torsion(app: typer.Typer):
    @app.command(name="torsion")
    def torsion(
        lambdas: Annotated[
            str,
            typer.Option("--lambdas", help="Comma separated eigenvalues, e.g. `2i,2`"),
        ],
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Order k of the roots of unity generated by the eigenvalues."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.numeric import parse_gaussian
        from jetflow.runner import run_torsion

        settings = setup(verbose, config)

        def build():
            values = [parse_gaussian(part) for part in lambdas.split(",")]
            return run_torsion(values, config=settings)

        render_or_exit(build, csv)

    return torsion
