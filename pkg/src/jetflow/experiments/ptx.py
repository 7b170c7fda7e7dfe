"""
The family P_t(x) = sum_j (e^(pi i t/j) - e^(-pi i t/j)) x^j. Its j-th
coefficient is 2i sin(pi t/j), which vanishes exactly when j divides t, so
at t = (p-1)! the first surviving coefficient is the one of x^p.
"""

from __future__ import annotations

import math

import mpmath

from pydantic import BaseModel
from sympy import isprime

from jetflow.config import DEFAULTS
from jetflow.errors import DomainError, VerificationError
from jetflow.utils import get_logger

logger = get_logger(__name__)


class PtxCoefficient(BaseModel):
    """Coefficient of x^j in P_t: exact vanishing and numeric |2 sin(pi t/j)|."""

    j: int
    vanishes: bool
    magnitude: float


def ptx_coefficients(
    t: int,
    order: int,
    tolerance: float = DEFAULTS.ptx_tolerance,
    dps: int = DEFAULTS.numeric_dps,
) -> list[PtxCoefficient]:
    if order < 1:
        raise DomainError("order must be at least 1")

    coefficients = []
    with mpmath.workdps(dps):
        for j in range(1, order + 1):
            vanishes = t % j == 0
            magnitude = float(abs(2 * mpmath.sin(mpmath.pi * t / j)))
            if vanishes != (magnitude < tolerance):
                raise VerificationError(
                    f"|2 sin(pi {t}/{j})| = {magnitude:.3g} disagrees with "
                    f"the divisibility of {t} by {j}"
                )
            coefficients.append(PtxCoefficient(j=j, vanishes=vanishes, magnitude=magnitude))
    return coefficients


def ptx_order_of_zero(coefficients: list[PtxCoefficient]) -> int | None:
    """Order of vanishing of P_t at 0; None when every listed coefficient is zero."""
    for coefficient in coefficients:
        if not coefficient.vanishes:
            return coefficient.j
    return None


def ptx_demo(
    prime: int,
    order: int | None = None,
    tolerance: float = DEFAULTS.ptx_tolerance,
) -> int:
    """
    Order of vanishing of P_t at t = (p-1)!, which is the intersection
    number of the graph of P_t with the axis.
    """
    if not isprime(prime):
        raise DomainError(f"{prime} is not prime")
    order = prime if order is None else order
    if order < prime:
        raise DomainError(f"order {order} must be at least the prime {prime}")

    t = math.factorial(prime - 1)
    result = ptx_order_of_zero(ptx_coefficients(t, order, tolerance))
    logger.debug("P_t at t = %d vanishes to order %s", t, result)
    if result != prime:
        raise VerificationError(f"P_t at t = {t} vanishes to order {result}, not {prime}")
    return result
