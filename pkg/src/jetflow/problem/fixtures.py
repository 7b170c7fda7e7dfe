from importlib.resources import files
from pathlib import Path

from jetflow import data

SUFFIX = ".jet"


def list_fixtures() -> list[str]:
    """Names of the bundled problem files, without suffix."""
    folder = files(data) / "fixtures"
    return sorted(
        entry.name[: -len(SUFFIX)]
        for entry in folder.iterdir()
        if entry.name.endswith(SUFFIX)
    )


def fixture_path(name: str) -> Path:
    path = Path(str(files(data) / "fixtures" / f"{name}{SUFFIX}"))
    if not path.exists():
        raise FileNotFoundError(
            f"No bundled fixture `{name}`; available: {', '.join(list_fixtures())}"
        )
    return path
