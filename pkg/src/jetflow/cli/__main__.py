import sys
import typer

from rich import print as rprint
from rich.markup import escape

from jetflow.errors import JetflowError

app = typer.Typer(
    name="jetflow",
    help="Exact jets of formal diffeomorphisms: intersection multiplicities, flows and embeddings",
    add_completion=False,
    no_args_is_help=True,
)


def _rich_exception_handler(exc_type, exc_value, exc_traceback):
    """Handle exceptions with rich formatting."""
    if exc_type is KeyboardInterrupt:
        rprint("\n ⚠️  [yellow]Operation cancelled by user[/yellow]")
        sys.exit(1)
    elif isinstance(exc_value, JetflowError):
        rprint(f"❌ [red]{exc_value.code}: {escape(str(exc_value))}[/red]")
        sys.exit(1)
    else:
        sys.__excepthook__(exc_type, exc_value, exc_traceback)


sys.excepthook = _rich_exception_handler
