from .commands import COMMANDS, Parameter
from .fixtures import fixture_path, list_fixtures
from .models import Command, Definition, ProblemFile
from .parse import load_problem, parse_problem

__all__ = [
    "COMMANDS",
    "Command",
    "Definition",
    "Parameter",
    "ProblemFile",
    "fixture_path",
    "list_fixtures",
    "load_problem",
    "parse_problem",
]
