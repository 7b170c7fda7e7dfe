from __future__ import annotations

from collections import defaultdict

from pydantic import BaseModel, ConfigDict, field_validator
from sympy import factorint
from sympy.ntheory import sqrt_mod
from sympy.polys.domains.gaussiandomains import GaussianInteger

from jetflow.errors import DomainError

from .gaussian import ONE, I, GaussianRational, gaussian, gaussian_parts

GaussianPrime = tuple[int, int]

_UNITS: dict[tuple[int, int], int] = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}


class GaussianFactorization(BaseModel):
    """
    z = i^unit_exp * prod(prime^exponent). Primes are canonical associates
    (re > 0, im >= 0) stored as (re, im); denominators give negative exponents.
    """

    model_config = ConfigDict(frozen=True)

    unit_exp: int = 0
    factors: tuple[tuple[GaussianPrime, int], ...] = ()

    @field_validator("unit_exp")
    @classmethod
    def reduce_unit_exp(cls, unit_exp: int) -> int:
        return unit_exp % 4

    def exponent(self, prime: GaussianPrime) -> int:
        return dict(self.factors).get(prime, 0)

    def primes(self) -> list[GaussianPrime]:
        return [prime for prime, _ in self.factors]


def gaussian_pow(z: GaussianRational, exponent: int) -> GaussianRational:
    """Integer power in Q(i), negative exponents through the inverse."""
    if exponent < 0:
        return (ONE / z) ** (-exponent)
    return z**exponent


def canonical_associate(a: int, b: int) -> tuple[GaussianPrime, int]:
    """
    Returns ((c, d), u) with a + bi = i^u (c + di) and c > 0, d >= 0.
    """
    if a == 0 and b == 0:
        raise DomainError("zero has no canonical associate")
    c, d = a, b
    for turns in range(4):
        if c > 0 and d >= 0:
            return (c, d), (-turns) % 4
        # multiply by i
        c, d = -d, c
    raise AssertionError("unreachable")


def _gaussian_gcd(a: GaussianInteger, b: GaussianInteger) -> GaussianInteger:
    while b:
        a, b = b, a % b
    return a


def gaussian_primes_over(q: int) -> list[GaussianPrime]:
    """Canonical Gaussian primes dividing the rational prime q."""
    if q == 2:
        return [(1, 1)]
    if q % 4 == 3:
        return [(q, 0)]

    root = sqrt_mod(q - 1, q)
    pi = _gaussian_gcd(GaussianInteger(q, 0), GaussianInteger(root, 1))
    prime, _ = canonical_associate(int(pi.x), int(pi.y))
    conjugate, _ = canonical_associate(prime[0], -prime[1])
    return sorted({prime, conjugate})


def _factor_gaussian_integer(a: int, b: int) -> tuple[int, dict[GaussianPrime, int]]:
    w = GaussianInteger(a, b)
    exponents: dict[GaussianPrime, int] = defaultdict(int)

    for q in sorted(factorint(a * a + b * b)):
        for prime in gaussian_primes_over(q):
            pi = GaussianInteger(*prime)
            while True:
                quotient, remainder = divmod(w, pi)
                if remainder:
                    break
                w = quotient
                exponents[prime] += 1

    unit = _UNITS.get((int(w.x), int(w.y)))
    if unit is None:
        raise AssertionError(f"cofactor {w} of {a}+{b}i is not a unit")
    return unit, dict(exponents)


def _prime_key(prime: GaussianPrime) -> tuple[int, int, int]:
    return (prime[0] ** 2 + prime[1] ** 2, prime[0], prime[1])


def gauss_factor(z: GaussianRational) -> GaussianFactorization:
    """
    Unique factorization of a nonzero Gaussian rational into a unit and
    canonical Gaussian primes.
    """
    if not z:
        raise DomainError("gauss_factor requires a nonzero Gaussian rational")

    num_re, num_im, den = gaussian_parts(z)
    unit_num, num_factors = _factor_gaussian_integer(num_re, num_im)
    unit_den, den_factors = _factor_gaussian_integer(den, 0)

    exponents: dict[GaussianPrime, int] = defaultdict(int)
    for prime, exponent in num_factors.items():
        exponents[prime] += exponent
    for prime, exponent in den_factors.items():
        exponents[prime] -= exponent

    factors = tuple(
        (prime, exponents[prime])
        for prime in sorted(exponents, key=_prime_key)
        if exponents[prime] != 0
    )
    return GaussianFactorization(unit_exp=unit_num - unit_den, factors=factors)


def reconstruct(factorization: GaussianFactorization) -> GaussianRational:
    value = I**factorization.unit_exp
    for (re_part, im_part), exponent in factorization.factors:
        value = value * gaussian_pow(gaussian(re_part, im_part), exponent)
    return value
