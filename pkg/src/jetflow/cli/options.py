import typer

from pathlib import Path
from typing_extensions import Annotated

VerboseOption = Annotated[
    bool | None, typer.Option("--verbose", "-v", help="Enable verbose logging")
]

ConfigOption = Annotated[
    Path | None,
    typer.Option("--config", help="JSON config file, defaults to ./jetflow.json"),
]

CsvOption = Annotated[
    bool, typer.Option("--csv", help="Write CSV rows to standard output")
]

VarsOption = Annotated[
    str, typer.Option("--vars", help="Comma separated variable names, e.g. `x,y`")
]

OrderOption = Annotated[int, typer.Option("--p", help="Jet order p", min=1)]

CapOption = Annotated[
    int | None,
    typer.Option("--cap", help="Largest jet order scanned, defaults to min(16, p)"),
]

ParallelOption = Annotated[
    bool,
    typer.Option("--parallel", help="Evaluate independent k values in a thread pool"),
]

GroupOption = Annotated[
    str,
    typer.Option(
        "--group",
        help="Group generators separated by `|`, each with `;` separated components",
    ),
]
