"""
Exact dense matrices over Q(i), as sympy DomainMatrix objects.
"""

from typing import Any, Sequence

import mpmath

from sympy import Poly, Symbol
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import DomainError

from .gaussian import GaussianRational, format_gaussian, gaussian_from_sympy, to_mpc

_LAMBDA = Symbol("lambda")


def matrix(rows: Sequence[Sequence[Any]]) -> DomainMatrix:
    rows = [[QQ_I.convert(value) for value in row] for row in rows]
    cols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), cols), QQ_I)


def identity(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ_I).to_dense()


def zeros(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), QQ_I).to_dense()


def entries(M: DomainMatrix) -> list[list[GaussianRational]]:
    return M.to_list()


def diagonal(M: DomainMatrix) -> list[GaussianRational]:
    rows = M.to_list()
    return [rows[i][i] for i in range(min(M.shape))]


def is_zero(M: DomainMatrix) -> bool:
    return all(not value for row in M.to_list() for value in row)


def is_lower_triangular(M: DomainMatrix) -> bool:
    rows = M.to_list()
    return all(not rows[i][j] for i in range(len(rows)) for j in range(i + 1, len(rows[i])))


def is_nilpotent(N: DomainMatrix) -> bool:
    """N^n = 0, checked by repeated squaring."""
    n = N.shape[0]
    power, exponent = N, 1
    while exponent < n:
        power = power * power
        exponent *= 2
    return is_zero(power)


def rank(M: DomainMatrix) -> int:
    if 0 in M.shape:
        return 0
    return M.to_sparse().rank()


def matrix_poly(coefficients: Sequence[GaussianRational], S: DomainMatrix) -> DomainMatrix:
    """Horner evaluation of sum c_j S^(d-j), coefficients highest degree first."""
    n = S.shape[0]
    one = identity(n)
    result = zeros(n, n)
    for coefficient in coefficients:
        result = result * S + one * coefficient
    return result


def charpoly(M: DomainMatrix) -> list[GaussianRational]:
    return list(M.charpoly())


def split_eigenvalues(M: DomainMatrix) -> list[GaussianRational]:
    """
    Eigenvalues with multiplicity when the characteristic polynomial splits
    into linear factors over Q(i).
    """
    coefficients = [QQ_I.to_sympy(c) for c in charpoly(M)]
    polynomial = Poly(coefficients, _LAMBDA, domain=QQ_I)
    _, factors = polynomial.factor_list()

    eigenvalues: list[GaussianRational] = []
    for factor, multiplicity in factors:
        if factor.degree() != 1:
            raise DomainError(
                f"spectrum not in Q(i): characteristic polynomial has the "
                f"irreducible factor {factor.as_expr()} over Q(i)"
            )
        leading, constant = factor.all_coeffs()
        root = gaussian_from_sympy(-constant / leading)
        eigenvalues.extend([root] * multiplicity)
    return eigenvalues


def distinct(values: Sequence[GaussianRational]) -> list[GaussianRational]:
    """Distinct values in first-occurrence order."""
    seen: list[GaussianRational] = []
    for value in values:
        if value not in seen:
            seen.append(value)
    return seen


def to_mpmath(M: DomainMatrix) -> mpmath.matrix:
    rows, cols = M.shape
    result = mpmath.matrix(rows, cols)
    for i, row in enumerate(M.to_list()):
        for j, value in enumerate(row):
            if value:
                result[i, j] = to_mpc(value)
    return result


def format_matrix(M: DomainMatrix) -> list[list[str]]:
    return [[format_gaussian(value) for value in row] for row in M.to_list()]
