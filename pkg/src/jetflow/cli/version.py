import importlib.metadata
import typer

from rich import print as rprint

ARITHMETIC_BACKENDS = ("sympy", "mpmath")


def _backend_versions() -> str:
    versions = []
    for name in ARITHMETIC_BACKENDS:
        try:
            versions.append(f"{name} {importlib.metadata.version(name)}")
        except importlib.metadata.PackageNotFoundError:
            versions.append(f"{name} missing")
    return ", ".join(versions)


def register_version(app: typer.Typer):
    @app.command()
    def version() -> None:
        """Show the installed version of `jetflow` package."""
        try:
            version = importlib.metadata.version("jetflow")
        except importlib.metadata.PackageNotFoundError:
            rprint(
                "⚠️  [yellow]jetflow version unknown (package not installed)[/yellow]"
            )
            raise typer.Exit()
        rprint(f"✅ jetflow version {version} ({_backend_versions()})")

    return version
