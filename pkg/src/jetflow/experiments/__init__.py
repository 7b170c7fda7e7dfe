from .commutator import CommutatorStep, commutator_demo, iterated_commutators
from .determination import distinct_jets
from .ptx import PtxCoefficient, ptx_coefficients, ptx_demo, ptx_order_of_zero

__all__ = [
    "CommutatorStep",
    "PtxCoefficient",
    "commutator_demo",
    "distinct_jets",
    "iterated_commutators",
    "ptx_coefficients",
    "ptx_demo",
    "ptx_order_of_zero",
]
