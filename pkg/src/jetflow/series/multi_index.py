"""
Multi-indices and the deglex monomial basis of the jet space C_p[[x]].

Deglex compares total degree first, then exponents lexicographically with
x1 most significant and larger exponents first: 1, x1, x2, x1^2, x1*x2, x2^2.
"""

from functools import lru_cache
from math import comb
from typing import Sequence

Monomial = tuple[int, ...]


def degree(alpha: Monomial) -> int:
    return sum(alpha)


def deglex_key(alpha: Monomial) -> tuple[int, tuple[int, ...]]:
    return degree(alpha), tuple(-a for a in alpha)


def dimension(n: int, p: int) -> int:
    """Number of monomials of degree at most p in n variables, C(n+p, n)."""
    return comb(n + p, n)


def _compositions(n: int, d: int) -> list[Monomial]:
    """Exponent vectors of degree d, x1 exponent descending."""
    if n == 1:
        return [(d,)]
    result = []
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            result.append((first, *rest))
    return result


@lru_cache(maxsize=None)
def monomials(n: int, p: int) -> tuple[Monomial, ...]:
    """Deglex-ordered basis of C_p[[x]]."""
    basis: list[Monomial] = []
    for d in range(p + 1):
        basis.extend(_compositions(n, d))
    return tuple(basis)


@lru_cache(maxsize=None)
def monomial_index(n: int, p: int) -> dict[Monomial, int]:
    return {alpha: rank for rank, alpha in enumerate(monomials(n, p))}


def unit_vector(n: int, i: int) -> Monomial:
    return tuple(int(j == i) for j in range(n))


def add(alpha: Monomial, beta: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(alpha, beta))


def monomial_label(alpha: Monomial, names: Sequence[str]) -> str:
    """Text form such as `x^2*y`; the constant monomial prints as `1`."""
    factors = []
    for name, exponent in zip(names, alpha):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors) if factors else "1"
