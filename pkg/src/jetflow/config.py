from __future__ import annotations

from pathlib import Path
from pydantic import BaseModel, Field

CONFIG_FILE = "jetflow.json"


class JetflowConfig(BaseModel):
    """
    Tunable constants shared by the library defaults and the CLI.
    """

    default_cap: int = Field(default=16, ge=0)
    numeric_dps: int = Field(default=30, ge=15)
    working_tolerance: float = 1e-12
    acceptance_tolerance: float = 1e-9
    group_law_tolerance: float = 1e-10
    ptx_tolerance: float = 1e-12
    branch_search_radius: int = Field(default=1, ge=0)
    parallel_workers: int = Field(default=4, ge=1)

    def save(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        _ = path.write_text(self.model_dump_json(indent=2))
        return path

    @classmethod
    def load(cls: type["JetflowConfig"], path: Path) -> "JetflowConfig":
        if not path.exists():
            raise FileNotFoundError(f"Config file not found at {path}")

        return cls.model_validate_json(path.read_text())


def resolve_config(path: Path | None = None) -> JetflowConfig:
    """
    Explicit path, else `jetflow.json` in the current directory, else defaults.
    """
    if path is not None:
        return JetflowConfig.load(path)

    local = Path.cwd() / CONFIG_FILE
    if local.exists():
        return JetflowConfig.load(local)

    return JetflowConfig()


DEFAULTS = JetflowConfig()
