from .index_seq import register_index_seq
from .mu_seq import register_mu_seq
from .multiplicity import register_multiplicity

__all__ = ["register_index_seq", "register_mu_seq", "register_multiplicity"]
