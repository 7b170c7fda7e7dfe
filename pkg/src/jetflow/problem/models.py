from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict

DefinitionKind = Literal["series", "ideal", "diffeo", "vectorfield", "group"]


class Definition(BaseModel):
    """A named object of a problem file, parsed at the declared order."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    kind: DefinitionKind
    text: str
    line: int
    value: Any


class Command(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    params: dict[str, str] = {}
    line: int


class ProblemFile(BaseModel):
    """
    Variables, order, named definitions and the single command of a problem
    file. `arguments` holds the command parameters with references resolved
    and literals converted.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    names: list[str]
    order: int
    definitions: dict[str, Definition] = {}
    command: Command
    arguments: dict[str, Any] = {}
