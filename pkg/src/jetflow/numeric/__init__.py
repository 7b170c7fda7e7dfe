from .factorization import (
    GaussianFactorization,
    canonical_associate,
    gauss_factor,
    gaussian_pow,
    reconstruct,
)
from .gaussian import (
    ONE,
    ZERO,
    I,
    GaussianRational,
    format_gaussian,
    gaussian,
    gaussian_from_sympy,
    gaussian_parts,
    parse_gaussian,
    to_mpc,
)
from .lattice import (
    IntLattice,
    integer_kernel,
    relation_lattice,
    torsion_order,
    unit_character,
    unit_lattice,
)
from .linalg import split_eigenvalues

__all__ = [
    "GaussianFactorization",
    "GaussianRational",
    "I",
    "IntLattice",
    "ONE",
    "ZERO",
    "canonical_associate",
    "format_gaussian",
    "gauss_factor",
    "gaussian",
    "gaussian_from_sympy",
    "gaussian_parts",
    "gaussian_pow",
    "integer_kernel",
    "parse_gaussian",
    "reconstruct",
    "relation_lattice",
    "split_eigenvalues",
    "to_mpc",
    "torsion_order",
    "unit_character",
    "unit_lattice",
]
