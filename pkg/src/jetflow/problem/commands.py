"""
Parameters accepted by each command, shared by problem files and the CLI.
"""

from __future__ import annotations

from typing import Literal, NamedTuple

ParameterKind = Literal[
    "series",
    "ideal",
    "diffeo",
    "vectorfield",
    "group",
    "int",
    "bool",
    "rational",
    "gaussians",
]

DEFINITION_KINDS = ("series", "ideal", "diffeo", "vectorfield", "group")


class Parameter(NamedTuple):
    kind: ParameterKind
    required: bool = True


COMMANDS: dict[str, dict[str, Parameter]] = {
    "multiplicity": {
        "V": Parameter("ideal"),
        "W": Parameter("ideal"),
        "cap": Parameter("int", False),
        "check": Parameter("bool", False),
    },
    "mu-seq": {
        "F": Parameter("diffeo"),
        "V": Parameter("ideal"),
        "W": Parameter("ideal"),
        "kmax": Parameter("int"),
        "cap": Parameter("int", False),
        "parallel": Parameter("bool", False),
    },
    "index-seq": {
        "F": Parameter("diffeo"),
        "kmax": Parameter("int"),
        "cap": Parameter("int", False),
        "parallel": Parameter("bool", False),
    },
    "commutator-demo": {
        "g1": Parameter("diffeo"),
        "g2": Parameter("diffeo"),
        "depth": Parameter("int"),
        "cap": Parameter("int", False),
    },
    "ptx-demo": {
        "prime": Parameter("int"),
        "order": Parameter("int", False),
    },
    "flow": {
        "X": Parameter("vectorfield"),
        "t": Parameter("rational", False),
    },
    "power": {
        "F": Parameter("diffeo"),
        "t": Parameter("int", False),
    },
    "linearize": {"K": Parameter("group")},
    "torsion": {"lambdas": Parameter("gaussians")},
    "embed": {
        "F": Parameter("diffeo"),
        "necessity": Parameter("int", False),
    },
    "jet-determination": {"K": Parameter("group")},
}
