from __future__ import annotations

import re

from typing import Literal, Sequence

from pydantic import BaseModel, ConfigDict

from jetflow.errors import DomainError, ParseError
from jetflow.series import TruncatedSeries


class IdealGens:
    """
    Generators of an ideal of C[[x]], each known to the same order p.
    """

    __slots__ = ("nvars", "order", "gens")

    def __init__(self, gens: Sequence[TruncatedSeries]):
        gens = tuple(gens)
        if not gens:
            raise DomainError("an ideal needs at least one generator")
        first = gens[0]
        if any(g.nvars != first.nvars for g in gens):
            raise DomainError("generators must share the number of variables")
        if any(g.order != first.order for g in gens):
            raise DomainError("generators must be known to the same order")
        self.nvars = first.nvars
        self.order = first.order
        self.gens = gens

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealGens):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __repr__(self) -> str:
        from jetflow.jets.text import format_components

        return f"IdealGens({format_components(self.gens)!r}, order={self.order})"


_RESULT = re.compile(r"^(?:finite:(?P<value>\d+)@(?P<m>\d+)|exceeded:(?P<cap>\d+))$")


class MultResult(BaseModel):
    """
    Outcome of a colength scan: `finite` with the value and the order m at
    which it stabilized, or `exceeded` when no m <= cap certified it.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["finite", "exceeded"]
    cap: int
    value: int | None = None
    stabilized_at: int | None = None

    @classmethod
    def finite(cls, value: int, m: int, cap: int) -> MultResult:
        return cls(kind="finite", cap=cap, value=value, stabilized_at=m)

    @classmethod
    def exceeded(cls, cap: int) -> MultResult:
        return cls(kind="exceeded", cap=cap)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __str__(self) -> str:
        if self.is_finite:
            return f"finite:{self.value}@{self.stabilized_at}"
        return f"exceeded:{self.cap}"

    @classmethod
    def parse(cls, text: str, cap: int | None = None) -> MultResult:
        match = _RESULT.match(text.strip())
        if match is None:
            raise ParseError(
                f"`{text}` is neither finite:v@m nor exceeded:cap", position=0
            )
        if match["cap"] is not None:
            return cls.exceeded(int(match["cap"]))
        m = int(match["m"])
        return cls.finite(int(match["value"]), m, m if cap is None else cap)
