import typer

from typing_extensions import Annotated

from jetflow.cli.options import ConfigOption, CsvOption, VerboseOption


def register_ptx_demo(app: typer.Typer):
    @app.command(name="ptx-demo")
    def ptx_demo(
        prime: Annotated[int, typer.Option("--prime", help="Prime p; t = (p-1)!")],
        order: Annotated[
            int | None, typer.Option("--order", help="Number of coefficients shown")
        ] = None,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Order of vanishing of the P_t family at t = (p-1)!."""
        from jetflow.cli.utils import render_or_exit, setup
        from jetflow.runner import run_ptx_demo

        settings = setup(verbose, config)
        render_or_exit(lambda: run_ptx_demo(prime, order, config=settings), csv)

    return ptx_demo
