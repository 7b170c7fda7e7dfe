from __future__ import annotations

from typing import Sequence

from jetflow.errors import ParseError
from jetflow.jets.text import split_components
from jetflow.series import parse_series

from .models import IdealGens


def parse_ideal(
    text: str | Sequence[str], names: Sequence[str], order: int
) -> IdealGens:
    """Generators separated by `;`, any number of them."""
    parts = split_components(text)
    if not parts:
        raise ParseError("an ideal needs at least one generator", position=0)
    return IdealGens([parse_series(part, names, order) for part in parts])
