from .multi_index import (
    Monomial,
    deglex_key,
    degree,
    dimension,
    monomial_index,
    monomial_label,
    monomials,
)
from .text import format_series, parse_series, parse_variables
from .truncated import (
    INFINITE,
    MonomialImages,
    mul_truncated,
    TruncatedSeries,
    identity_components,
    series_ring,
    ts_add,
    ts_compose,
    ts_diff,
    ts_from_rational,
    ts_invert_unit,
    ts_mul,
    ts_neg,
    ts_order,
    ts_scale,
    ts_sub,
    ts_truncate,
)

__all__ = [
    "INFINITE",
    "Monomial",
    "MonomialImages",
    "mul_truncated",
    "TruncatedSeries",
    "deglex_key",
    "degree",
    "dimension",
    "format_series",
    "identity_components",
    "monomial_index",
    "monomial_label",
    "monomials",
    "parse_series",
    "parse_variables",
    "series_ring",
    "ts_add",
    "ts_compose",
    "ts_diff",
    "ts_from_rational",
    "ts_invert_unit",
    "ts_mul",
    "ts_neg",
    "ts_order",
    "ts_scale",
    "ts_sub",
    "ts_truncate",
]
