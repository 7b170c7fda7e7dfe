from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from jetflow.errors import DomainError
from jetflow.utils import get_logger

from .factorization import GaussianFactorization, gauss_factor
from .gaussian import GaussianRational

logger = get_logger(__name__)

Vector = tuple[int, ...]


class IntLattice(BaseModel):
    """Sublattice of Z^ambient_rank given by linearly independent basis vectors."""

    model_config = ConfigDict(frozen=True)

    ambient_rank: int
    basis: tuple[Vector, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.basis)


def _integer_matrix(rows: list[list[int]] | list[Vector], cols: int) -> DomainMatrix:
    return DomainMatrix(
        [[ZZ(int(value)) for value in row] for row in rows], (len(rows), cols), ZZ
    )


def _canonical_basis(vectors: list[Vector], ambient_rank: int) -> tuple[Vector, ...]:
    """
    Hermite normal form of the spanned lattice, each vector signed so that
    its first nonzero entry is positive.
    """
    if not vectors:
        return ()

    columns = DomainMatrix(
        [[ZZ(vector[i]) for vector in vectors] for i in range(ambient_rank)],
        (ambient_rank, len(vectors)),
        ZZ,
    )
    hnf = hermite_normal_form(columns).to_list()
    rank = len(hnf[0]) if hnf else 0

    basis = []
    for j in range(rank):
        vector = [int(hnf[i][j]) for i in range(ambient_rank)]
        leading = next(value for value in vector if value != 0)
        if leading < 0:
            vector = [-value for value in vector]
        basis.append(tuple(vector))
    return tuple(basis)


def integer_kernel(A: list[list[int]], cols: int | None = None) -> IntLattice:
    """
    Lattice {e in Z^cols : A e = 0}, computed from the Smith decomposition
    S A T = D: the columns of T beyond the nonzero invariant factors span it.
    """
    if cols is None:
        if not A:
            raise DomainError("column count required for a matrix without rows")
        cols = len(A[0])

    if not A:
        identity = [tuple(int(i == j) for j in range(cols)) for i in range(cols)]
        return IntLattice(ambient_rank=cols, basis=tuple(identity))

    smf, _, t = smith_normal_decomp(_integer_matrix(A, cols))
    diagonal = smf.to_list()
    transform = t.to_list()

    kernel = []
    for j in range(cols):
        if j < len(diagonal) and diagonal[j][j] != 0:
            continue
        kernel.append(tuple(int(transform[i][j]) for i in range(cols)))

    return IntLattice(ambient_rank=cols, basis=_canonical_basis(kernel, cols))


def exponent_matrix(
    factorizations: list[GaussianFactorization],
) -> list[list[int]]:
    """Rows indexed by the Gaussian primes occurring, columns by the inputs."""
    primes = sorted(
        {prime for factorization in factorizations for prime in factorization.primes()},
        key=lambda prime: (prime[0] ** 2 + prime[1] ** 2, prime),
    )
    return [
        [factorization.exponent(prime) for factorization in factorizations]
        for prime in primes
    ]


def _factor_all(lambdas: list[GaussianRational]) -> list[GaussianFactorization]:
    for index, value in enumerate(lambdas):
        if not value:
            raise DomainError(f"generator {index} is zero; generators must be nonzero")
    return [gauss_factor(value) for value in lambdas]


def unit_character(
    factorizations: list[GaussianFactorization], exponents: Vector
) -> int:
    """Sum of e_j * unit_exp(lambda_j) mod 4: the power of i in prod lambda_j^e_j."""
    return (
        sum(e * f.unit_exp for e, f in zip(exponents, factorizations, strict=True)) % 4
    )


def unit_lattice(lambdas: list[GaussianRational]) -> tuple[IntLattice, list[int]]:
    """
    Exponent vectors e with prod lambda_j^e_j a unit, together with the unit
    character of each basis vector.
    """
    factorizations = _factor_all(lambdas)
    lattice = integer_kernel(exponent_matrix(factorizations), cols=len(lambdas))
    characters = [unit_character(factorizations, e) for e in lattice.basis]
    return lattice, characters


def torsion_order(lambdas: list[GaussianRational]) -> int:
    """
    Order of the group of roots of unity inside the multiplicative group
    generated by `lambdas` in Q(i)*; always 1, 2 or 4.
    """
    lattice, characters = unit_lattice(lambdas)
    order = 4 // math.gcd(4, *characters)
    logger.debug(
        "unit lattice basis %s with characters %s, torsion order %d",
        lattice.basis,
        characters,
        order,
    )
    return order


def relation_lattice(lambdas: list[GaussianRational]) -> IntLattice:
    """Lattice of exponent vectors e with prod lambda_j^e_j = 1."""
    lattice, characters = unit_lattice(lambdas)
    n = len(lambdas)
    if lattice.rank == 0:
        return IntLattice(ambient_rank=n)

    # coefficient vectors a with sum a_j c_j = 0 mod 4
    coefficients = integer_kernel([[*characters, 4]], cols=lattice.rank + 1)
    relations = []
    for vector in coefficients.basis:
        a = vector[: lattice.rank]
        relations.append(
            tuple(
                sum(a_j * b[i] for a_j, b in zip(a, lattice.basis)) for i in range(n)
            )
        )
    return IntLattice(ambient_rank=n, basis=_canonical_basis(relations, n))
