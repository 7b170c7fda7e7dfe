"""Text form of diffeomorphisms and vector fields, one component per entry."""

from __future__ import annotations

from typing import Sequence

from jetflow.errors import ParseError
from jetflow.series import TruncatedSeries, format_series, parse_series

from .diffeo import JetDiffeo
from .vector_field import JetVectorField


def split_components(text: str | Sequence[str]) -> list[str]:
    if isinstance(text, str):
        parts = text.replace("\n", ";").split(";")
        return [part.strip() for part in parts if part.strip()]
    return [part.strip() for part in text]


def parse_components(
    text: str | Sequence[str], names: Sequence[str], order: int
) -> list[TruncatedSeries]:
    """Components separated by `;` or given as a list, one per variable."""
    parts = split_components(text)
    if len(parts) != len(names):
        raise ParseError(
            f"expected {len(names)} components for variables "
            f"{', '.join(names)}, got {len(parts)}",
            position=0,
        )
    return [parse_series(part, names, order) for part in parts]


def parse_diffeo(
    text: str | Sequence[str], names: Sequence[str], order: int
) -> JetDiffeo:
    return JetDiffeo(parse_components(text, names, order))


def parse_vector_field(
    text: str | Sequence[str], names: Sequence[str], order: int
) -> JetVectorField:
    return JetVectorField(parse_components(text, names, order))


def format_components(
    components: Sequence[TruncatedSeries], names: Sequence[str] | None = None
) -> str:
    return " ; ".join(format_series(component, names) for component in components)
