"""
Closed form of the discrete orbit operator F^t on C_p[[x]].

With as_operator(F) = S U, S semisimple and U unipotent commuting,
S^t = sum_mu mu^t P_mu over the distinct eigenvalues, with Lagrange
projectors P_mu, and U^t = sum_k binom(t, k) (U - I)^k is a finite sum.
"""

from __future__ import annotations

from math import factorial

from sympy.functions.combinatorial.numbers import stirling
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import VerificationError
from jetflow.jets import JetDiffeo, diffeo_truncate, operator_jordan
from jetflow.numeric.gaussian import GaussianRational
from jetflow.numeric.linalg import distinct, identity, is_zero
from jetflow.utils import get_logger

from .expoly import CharacterKind, ExpPoly
from .matrix import ExpPolyMatrix, evaluate_matrix_int

logger = get_logger(__name__)

MULT = CharacterKind.MULT


def binomial_coefficients(k: int) -> list[GaussianRational]:
    """Coefficients of binom(t, k) in powers of t, from signed Stirling numbers."""
    scale = QQ_I.one / factorial(k)
    return [
        QQ_I.convert(int(stirling(k, j, kind=1, signed=True))) * scale
        for j in range(k + 1)
    ]


def spectral_projectors(
    S: DomainMatrix, eigenvalues: list[GaussianRational]
) -> list[tuple[GaussianRational, DomainMatrix]]:
    """P_mu = prod_{nu != mu} (S - nu I) / (mu - nu) for the distinct eigenvalues."""
    size = S.shape[0]
    values = distinct(eigenvalues)
    projectors = []
    for mu in values:
        P = identity(size)
        for nu in values:
            if nu != mu:
                P = P * (S - identity(size) * nu) * (QQ_I.one / (mu - nu))
        projectors.append((mu, P))

    total = projectors[0][1]
    for _, P in projectors[1:]:
        total = total + P
    if total != identity(size):
        raise VerificationError("spectral projectors do not sum to the identity")
    return projectors


def nilpotent_powers(N: DomainMatrix) -> list[DomainMatrix]:
    """I, N, N^2, ... up to the last nonzero power."""
    size = N.shape[0]
    powers = [identity(size)]
    for _ in range(size):
        following = powers[-1] * N
        if is_zero(following):
            return powers
        powers.append(following)
    raise VerificationError("unipotent factor is not unipotent")


def power_operator(F: JetDiffeo, p: int | None = None, verify: bool = True) -> ExpPolyMatrix:
    """
    M(t) with M(m) = as_operator(F^m) exactly for every integer m, as a
    matrix of `mult` exponential polynomials.
    """
    if p is not None and p != F.order:
        F = diffeo_truncate(F, p)

    decomposition = operator_jordan(F)
    S, U = decomposition.semisimple, decomposition.unipotent
    size = S.shape[0]

    projectors = spectral_projectors(S, decomposition.eigenvalues)
    powers = nilpotent_powers(U - identity(size))
    binomials = [binomial_coefficients(k) for k in range(len(powers))]

    terms = [[{} for _ in range(size)] for _ in range(size)]
    for mu, P in projectors:
        for k, power in enumerate(powers):
            block = (P * power).to_list()
            for beta, row in enumerate(block):
                for alpha, value in enumerate(row):
                    if not value:
                        continue
                    entry = terms[beta][alpha]
                    for j, b in enumerate(binomials[k]):
                        if b:
                            key = (mu, j)
                            entry[key] = entry.get(key, QQ_I.zero) + value * b

    rows = [[ExpPoly(MULT, entry) for entry in row] for row in terms]
    M = ExpPolyMatrix(F.nvars, F.order, MULT, rows)
    if verify:
        if evaluate_matrix_int(M, 0) != identity(size):
            raise VerificationError("orbit operator is not the identity at t = 0")
        if evaluate_matrix_int(M, 1) != decomposition.operator.matrix:
            raise VerificationError("orbit operator does not reproduce F at t = 1")
    logger.debug(
        "orbit operator of size %d, %d eigenvalues, nilpotency index %d",
        size,
        len(projectors),
        len(powers),
    )
    return M


def semisimple_coefficient_check(F: JetDiffeo, p: int | None = None) -> bool:
    """True when no entry of F^t carries a positive power of t."""
    return power_operator(F, p).t_degree() == 0
