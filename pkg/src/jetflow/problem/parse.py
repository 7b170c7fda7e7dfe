"""
Reader for `.jet` problem files.

    # comment
    vars x, y
    order 8
    ideal V = y - x^2 ; x^3
    diffeo F = 2*x ; 4*y - x^2
    group K = F | G
    command mu-seq F=F V=V W=W kmax=10 cap=8
"""

from __future__ import annotations

import re

from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from jetflow.errors import ParseError
from jetflow.intersect import IdealGens, parse_ideal
from jetflow.jets import FiniteGroupAction, parse_diffeo, parse_vector_field
from jetflow.numeric.gaussian import parse_gaussian
from jetflow.series import parse_series, parse_variables

from .commands import COMMANDS, DEFINITION_KINDS, Parameter
from .models import Command, Definition, ProblemFile

_DEFINITION = re.compile(
    r"^(?P<kind>series|ideal|diffeo|vectorfield|group)\s+"
    r"(?P<name>\S+)\s*=\s*(?P<text>.*)$"
)
_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_TRUE = {"true", "yes", "1"}
_FALSE = {"false", "no", "0"}


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _relocate(error: ParseError, line: int, offset: int) -> ParseError:
    position = None if error.position is None else error.position + offset
    return ParseError(error.message, position=position, line=line)


def _header(lines: list[tuple[int, str]]) -> tuple[list[str], int, list[tuple[int, str]]]:
    names: list[str] | None = None
    order: int | None = None
    rest = []
    for number, line in lines:
        keyword, _, value = line.partition(" ")
        value = value.strip()
        if keyword == "vars":
            if names is not None:
                raise ParseError("duplicate `vars` line", position=0, line=number)
            try:
                names = parse_variables(value)
            except ParseError as e:
                raise _relocate(e, number, len("vars ")) from e
        elif keyword == "order":
            if order is not None:
                raise ParseError("duplicate `order` line", position=0, line=number)
            try:
                order = int(value)
            except ValueError as e:
                raise ParseError(
                    f"order `{value}` is not an integer", position=6, line=number
                ) from e
            if order < 1:
                raise ParseError("order must be at least 1", position=6, line=number)
        else:
            rest.append((number, line))

    if names is None:
        raise ParseError("missing `vars` line")
    if order is None:
        raise ParseError("missing `order` line")
    return names, order, rest


def _parse_definition(
    kind: str,
    text: str,
    names: Sequence[str],
    order: int,
    definitions: dict[str, Definition],
    number: int,
    offset: int,
) -> Any:
    try:
        if kind == "series":
            return parse_series(text, names, order)
        if kind == "ideal":
            return parse_ideal(text, names, order)
        if kind == "diffeo":
            return parse_diffeo(text, names, order)
        if kind == "vectorfield":
            return parse_vector_field(text, names, order)
    except ParseError as e:
        raise _relocate(e, number, offset) from e

    generators = []
    for reference in (part.strip() for part in text.split("|")):
        definition = definitions.get(reference)
        if definition is None:
            raise ParseError(
                f"group refers to undefined `{reference}`",
                position=offset + max(text.find(reference), 0),
                line=number,
            )
        if definition.kind != "diffeo":
            raise ParseError(
                f"group element `{reference}` is a {definition.kind}, not a diffeo",
                position=offset + text.find(reference),
                line=number,
            )
        generators.append(definition.value)
    return FiniteGroupAction.generate(generators)


def _parse_command(number: int, line: str) -> Command:
    parts = line.split()
    if len(parts) < 2:
        raise ParseError("`command` needs a command name", position=0, line=number)
    name = parts[1]
    if name not in COMMANDS:
        raise ParseError(
            f"unknown command `{name}`; known: {', '.join(COMMANDS)}",
            position=line.find(name),
            line=number,
        )

    params: dict[str, str] = {}
    for part in parts[2:]:
        key, sep, value = part.partition("=")
        if not sep or not key or not value:
            raise ParseError(
                f"parameter `{part}` is not of the form key=value",
                position=line.find(part),
                line=number,
            )
        if key not in COMMANDS[name]:
            raise ParseError(
                f"`{name}` has no parameter `{key}`",
                position=line.find(part),
                line=number,
            )
        if key in params:
            raise ParseError(
                f"duplicate parameter `{key}`", position=line.find(part), line=number
            )
        params[key] = value
    return Command(name=name, params=params, line=number)


def _literal(parameter: Parameter, value: str) -> Any:
    if parameter.kind == "int":
        return int(value)
    if parameter.kind == "bool":
        lowered = value.lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise ValueError(value)
    if parameter.kind == "rational":
        return Fraction(value)
    if parameter.kind == "gaussians":
        return [parse_gaussian(part) for part in value.split(",")]
    raise ValueError(value)


def _argument(
    key: str,
    value: str,
    parameter: Parameter,
    problem: ProblemFile,
    command: Command,
) -> Any:
    definition = problem.definitions.get(value)
    if parameter.kind in DEFINITION_KINDS:
        if definition is not None:
            if definition.kind == parameter.kind:
                return definition.value
            if parameter.kind == "ideal" and definition.kind == "series":
                return IdealGens([definition.value])
            raise ParseError(
                f"`{key}` expects a {parameter.kind}, but `{value}` is a {definition.kind}",
                line=command.line,
            )
        if _IDENTIFIER.match(value) and value not in problem.names:
            raise ParseError(
                f"`{key}` refers to undefined `{value}`", line=command.line
            )
        if parameter.kind == "group":
            raise ParseError(f"`{key}` must name a group definition", line=command.line)
        try:
            return _parse_definition(
                parameter.kind, value, problem.names, problem.order, {}, command.line, 0
            )
        except ParseError as e:
            raise ParseError(f"`{key}`: {e.message}", line=command.line) from e

    if definition is not None:
        raise ParseError(
            f"`{key}` expects a literal {parameter.kind}, not the definition `{value}`",
            line=command.line,
        )
    try:
        return _literal(parameter, value)
    except (ValueError, ZeroDivisionError, ParseError) as e:
        raise ParseError(
            f"`{key}={value}` is not a valid {parameter.kind}", line=command.line
        ) from e


def parse_problem(text: str) -> ProblemFile:
    lines = [
        (number, _strip(raw))
        for number, raw in enumerate(text.splitlines(), start=1)
        if _strip(raw)
    ]
    names, order, rest = _header(lines)

    definitions: dict[str, Definition] = {}
    command: Command | None = None
    for number, line in rest:
        keyword = line.split(maxsplit=1)[0]
        if keyword == "command":
            if command is not None:
                raise ParseError("only one `command` line is allowed", position=0, line=number)
            command = _parse_command(number, line)
            continue

        match = _DEFINITION.match(line)
        if match is None:
            raise ParseError(f"unknown keyword `{keyword}`", position=0, line=number)
        name = match["name"]
        if not _IDENTIFIER.match(name) or name in names:
            raise ParseError(
                f"`{name}` cannot name a definition", position=match.start("name"), line=number
            )
        if name in definitions:
            raise ParseError(
                f"`{name}` is already defined on line {definitions[name].line}",
                position=match.start("name"),
                line=number,
            )
        value = _parse_definition(
            match["kind"],
            match["text"],
            names,
            order,
            definitions,
            number,
            match.start("text"),
        )
        definitions[name] = Definition(
            name=name, kind=match["kind"], text=match["text"], line=number, value=value
        )

    if command is None:
        raise ParseError("missing `command` line")

    problem = ProblemFile(names=names, order=order, definitions=definitions, command=command)
    for key, parameter in COMMANDS[command.name].items():
        if key not in command.params:
            if parameter.required:
                raise ParseError(
                    f"`{command.name}` needs the parameter `{key}`", line=command.line
                )
            continue
        problem.arguments[key] = _argument(
            key, command.params[key], parameter, problem, command
        )
    return problem


def load_problem(path: Path) -> ProblemFile:
    if not path.exists():
        raise FileNotFoundError(f"Problem file not found at {path}")
    return parse_problem(path.read_text(encoding="utf-8"))
