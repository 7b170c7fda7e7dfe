from .embedding import (
    BranchData,
    EmbeddingResult,
    SemisimpleField,
    branch_corrections,
    branch_necessity,
    derivation_defect,
    embed_power_in_flow,
    roots_of_unity_order,
    takens_embed,
)
from .log_symbols import LogSymbolRing

__all__ = [
    "BranchData",
    "EmbeddingResult",
    "LogSymbolRing",
    "SemisimpleField",
    "branch_corrections",
    "branch_necessity",
    "derivation_defect",
    "embed_power_in_flow",
    "roots_of_unity_order",
    "takens_embed",
]
