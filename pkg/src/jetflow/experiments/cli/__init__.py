from .commutator_demo import register_commutator_demo
from .jet_determination import register_jet_determination
from .ptx_demo import register_ptx_demo

__all__ = [
    "register_commutator_demo",
    "register_jet_determination",
    "register_ptx_demo",
]
