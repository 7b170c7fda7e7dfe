from .expoly import (
    Character,
    CharacterKind,
    ExpPoly,
    ep_add,
    ep_at_zero,
    ep_dt,
    ep_eval_exact,
    ep_eval_int,
    ep_eval_num,
    ep_mul,
    ep_neg,
    ep_scale,
    ep_sub,
    format_exppoly,
)
from .flow import flow_operator, group_law_residual, solve_scalar
from .matrix import (
    ExpPolyMatrix,
    evaluate_matrix_exact,
    evaluate_matrix_int,
    evaluate_matrix_num,
    operator_csv,
    operator_rows,
)
from .power import power_operator, semisimple_coefficient_check

__all__ = [
    "Character",
    "CharacterKind",
    "ExpPoly",
    "ExpPolyMatrix",
    "ep_add",
    "ep_at_zero",
    "ep_dt",
    "ep_eval_exact",
    "ep_eval_int",
    "ep_eval_num",
    "ep_mul",
    "ep_neg",
    "ep_scale",
    "ep_sub",
    "evaluate_matrix_exact",
    "evaluate_matrix_int",
    "evaluate_matrix_num",
    "flow_operator",
    "format_exppoly",
    "group_law_residual",
    "operator_csv",
    "operator_rows",
    "power_operator",
    "semisimple_coefficient_check",
    "solve_scalar",
]
