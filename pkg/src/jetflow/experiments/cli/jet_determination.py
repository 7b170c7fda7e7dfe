import typer

from jetflow.cli.options import (
    ConfigOption,
    CsvOption,
    GroupOption,
    OrderOption,
    VarsOption,
    VerboseOption,
)


def register_jet_determination(app: typer.Typer):
    @app.command(name="jet-determination")
    def jet_determination(
        variables: VarsOption,
        p: OrderOption,
        group: GroupOption,
        csv: CsvOption = False,
        config: ConfigOption = None,
        verbose: VerboseOption = False,
    ) -> None:
        """Smallest order at which jets tell the group elements apart."""
        from jetflow.cli.utils import parse_group, render_or_exit, setup
        from jetflow.runner import run_jet_determination
        from jetflow.series import parse_variables

        settings = setup(verbose, config)

        def build():
            names = parse_variables(variables)
            return run_jet_determination(parse_group(group, names, p), config=settings)

        render_or_exit(build, csv)

    return jet_determination
