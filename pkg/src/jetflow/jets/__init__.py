from .diffeo import (
    JetDiffeo,
    Spectrum,
    diffeo_compose,
    diffeo_identity,
    diffeo_inverse,
    diffeo_nu,
    diffeo_power,
    diffeo_truncate,
    group_commutator,
    linear_part,
    spectrum,
)
from .exp_log import exp_vf, log_unipotent
from .group import FiniteGroupAction, bochner_average, jet_determination
from .jordan import jordan_chevalley, multiplicative_jordan, operator_jordan
from .operator import (
    JetOperator,
    as_operator,
    components_from_operator,
    is_automorphism_operator,
    is_derivation_operator,
    vf_as_operator,
)
from .text import format_components, parse_diffeo, parse_vector_field
from .vector_field import (
    JetVectorField,
    jet_spectrum,
    vf_apply,
    vf_bracket,
    vf_linear_part,
)

__all__ = [
    "FiniteGroupAction",
    "JetDiffeo",
    "JetOperator",
    "JetVectorField",
    "Spectrum",
    "as_operator",
    "bochner_average",
    "components_from_operator",
    "diffeo_compose",
    "diffeo_identity",
    "diffeo_inverse",
    "diffeo_nu",
    "diffeo_power",
    "diffeo_truncate",
    "exp_vf",
    "format_components",
    "group_commutator",
    "is_automorphism_operator",
    "is_derivation_operator",
    "jet_determination",
    "jet_spectrum",
    "jordan_chevalley",
    "linear_part",
    "log_unipotent",
    "multiplicative_jordan",
    "operator_jordan",
    "parse_diffeo",
    "parse_vector_field",
    "spectrum",
    "vf_apply",
    "vf_as_operator",
    "vf_bracket",
    "vf_linear_part",
]
