"""
Additive and multiplicative Jordan-Chevalley decompositions, exact over Q(i).
"""

from __future__ import annotations

import math

from typing import NamedTuple, Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import VerificationError
from jetflow.numeric.factorization import gaussian_pow
from jetflow.numeric.gaussian import GaussianRational
from jetflow.numeric.linalg import (
    distinct,
    is_nilpotent,
    is_zero,
    matrix_poly,
    split_eigenvalues,
)
from jetflow.series import monomials
from jetflow.utils import get_logger

from .diffeo import JetDiffeo, diffeo_compose, spectrum
from .operator import (
    JetOperator,
    as_operator,
    components_from_operator,
    is_automorphism_operator,
)

logger = get_logger(__name__)


def _poly_from_roots(roots: Sequence[GaussianRational]) -> list[GaussianRational]:
    """Coefficients of prod (x - r), highest degree first."""
    coefficients = [QQ_I.one]
    for root in roots:
        shifted = coefficients + [QQ_I.zero]
        for k in range(1, len(shifted)):
            shifted[k] = shifted[k] - root * coefficients[k - 1]
        coefficients = shifted
    return coefficients


def _derivative(coefficients: Sequence[GaussianRational]) -> list[GaussianRational]:
    degree = len(coefficients) - 1
    return [c * (degree - k) for k, c in enumerate(coefficients[:-1])]


def jordan_chevalley(
    M: DomainMatrix,
    eigenvalues: Sequence[GaussianRational] | None = None,
) -> tuple[DomainMatrix, DomainMatrix]:
    """
    M = S + N with S semisimple, N nilpotent and SN = NS, both polynomials
    in M. Newton iteration S <- S - q(S) q'(S)^-1 on the squarefree
    polynomial q with the distinct eigenvalues as roots.

    `eigenvalues` may be supplied when they are known in advance; otherwise
    they are extracted exactly from the characteristic polynomial.
    """
    if eigenvalues is None:
        eigenvalues = split_eigenvalues(M)

    q = _poly_from_roots(distinct(eigenvalues))
    dq = _derivative(q)
    size = M.shape[0]
    bound = math.ceil(math.log2(max(size, 1))) + 1

    S = M
    for iteration in range(bound + 1):
        residual = matrix_poly(q, S)
        if is_zero(residual):
            logger.debug("Newton iteration converged after %d steps", iteration)
            break
        if iteration == bound:
            raise VerificationError(
                f"Newton iteration did not annihilate q(S) within {bound} steps"
            )
        S = S - residual * matrix_poly(dq, S).inv()

    N = M - S
    if not is_nilpotent(N):
        raise VerificationError("nilpotent part of the decomposition is not nilpotent")
    if S * N != N * S:
        raise VerificationError("Jordan-Chevalley parts do not commute")
    return S, N


class OperatorJordan(NamedTuple):
    operator: JetOperator
    semisimple: DomainMatrix
    unipotent: DomainMatrix
    eigenvalues: list[GaussianRational]


def operator_eigenvalues(F: JetDiffeo) -> list[GaussianRational]:
    """lambda^alpha for every deglex monomial alpha, lambda the linear spectrum."""
    lambdas = spectrum(F).eigenvalues
    values = []
    for alpha in monomials(F.nvars, F.order):
        value = QQ_I.one
        for lam, a in zip(lambdas, alpha):
            value = value * gaussian_pow(lam, a)
        values.append(value)
    return values


def operator_jordan(F: JetDiffeo) -> OperatorJordan:
    """
    Multiplicative decomposition as_operator(F) = S U of the induced operator.
    """
    A = as_operator(F)
    eigenvalues = operator_eigenvalues(F)
    S, N = jordan_chevalley(A.matrix, eigenvalues)
    U = S.inv() * A.matrix
    return OperatorJordan(A, S, U, eigenvalues)


def multiplicative_jordan(
    F: JetDiffeo, decomposition: OperatorJordan | None = None
) -> tuple[JetDiffeo, JetDiffeo]:
    """
    F = F_ss o F_u with F_ss semisimple, F_u unipotent, commuting at order p.
    Both factors are read off the coordinate images of S and U.
    """
    if decomposition is None:
        decomposition = operator_jordan(F)
    n, p = F.nvars, F.order

    semisimple = JetOperator(n, p, decomposition.semisimple)
    unipotent = JetOperator(n, p, decomposition.unipotent)
    for name, operator in [("semisimple", semisimple), ("unipotent", unipotent)]:
        if not is_automorphism_operator(operator):
            raise VerificationError(
                f"{name} factor of the operator is not an algebra automorphism"
            )

    F_ss = components_from_operator(semisimple)
    F_u = components_from_operator(unipotent)
    if diffeo_compose(F_ss, F_u) != F or diffeo_compose(F_u, F_ss) != F:
        raise VerificationError("multiplicative Jordan factors do not recompose to F")
    return F_ss, F_u
