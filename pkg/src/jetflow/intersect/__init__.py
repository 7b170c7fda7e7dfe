from .colength import (
    colength,
    colength_oracle,
    ideal_sum,
    jet_colength,
    multiplicity,
)
from .dynamics import (
    fixed_point_ideal,
    fixed_point_index,
    index_sequence,
    iterates,
    mu_sequence,
    pullback,
)
from .models import IdealGens, MultResult
from .text import parse_ideal

__all__ = [
    "IdealGens",
    "MultResult",
    "colength",
    "colength_oracle",
    "fixed_point_ideal",
    "fixed_point_index",
    "ideal_sum",
    "index_sequence",
    "iterates",
    "jet_colength",
    "mu_sequence",
    "multiplicity",
    "parse_ideal",
    "pullback",
]
