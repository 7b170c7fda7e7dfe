"""
Colength of ideals of C[[x]] from finite jets.

dim C[[x]]/I > m holds exactly when dim C_m[[x]]/j_m(I) > m, so scanning
m = 0, 1, ... and stopping at the first m whose jet colength is at most m
gives the colength of I from data of order m.
"""

from __future__ import annotations

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import DomainError
from jetflow.series import INFINITE, dimension, monomial_index, monomials, ts_order
from jetflow.series.multi_index import add, degree
from jetflow.utils import get_logger

from .models import IdealGens, MultResult

logger = get_logger(__name__)


def _multiples(I: IdealGens, m: int, skip_zero: bool) -> list[list]:
    """Dense order-m vectors of x^gamma f_i for |gamma| <= m."""
    index = monomial_index(I.nvars, m)
    size = len(index)
    vectors = []
    for f in I.gens:
        lowest = ts_order(f)
        if skip_zero and lowest == INFINITE:
            continue
        terms = [(alpha, c) for alpha, c in f.items() if degree(alpha) <= m]
        for gamma in monomials(I.nvars, m):
            if skip_zero and degree(gamma) + lowest > m:
                continue
            vector = [QQ_I.zero] * size
            for alpha, c in terms:
                beta = add(alpha, gamma)
                if degree(beta) <= m:
                    vector[index[beta]] = c
            vectors.append(vector)
    return vectors


def _check_order(I: IdealGens, m: int) -> None:
    if m < 0:
        raise DomainError("jet order must be nonnegative")
    if m > I.order:
        raise DomainError(
            f"generators are known to order {I.order}; order {m} needs more "
            "tail data"
        )


def jet_colength(I: IdealGens, m: int) -> int:
    """dim C_m[[x]]/j_m(I) = D_m - rank of the truncated multiples of the generators."""
    _check_order(I, m)
    size = dimension(I.nvars, m)
    vectors = _multiples(I, m, skip_zero=True)
    if not vectors:
        return size
    rank = DomainMatrix(vectors, (len(vectors), size), QQ_I).rank()
    return size - rank


def colength(I: IdealGens, cap: int | None = None) -> MultResult:
    """Stabilization scan of jet_colength over m = 0..cap."""
    cap = I.order if cap is None else cap
    _check_order(I, cap)
    previous = 0
    for m in range(cap + 1):
        value = jet_colength(I, m)
        logger.debug("jet colength at order %d: %d", m, value)
        if value < previous:
            raise DomainError("jet colength decreased; generators are inconsistent")
        previous = value
        if value <= m:
            return MultResult.finite(value, m, cap)

    logger.warning("colength not certified up to cap %d", cap)
    return MultResult.exceeded(cap)


def ideal_sum(I_V: IdealGens, I_W: IdealGens) -> IdealGens:
    if I_V.nvars != I_W.nvars:
        raise DomainError(
            f"ideals in {I_V.nvars} and {I_W.nvars} variables cannot be added"
        )
    if I_V.order != I_W.order:
        raise DomainError(
            f"ideals known to orders {I_V.order} and {I_W.order} cannot be added"
        )
    return IdealGens(I_V.gens + I_W.gens)


def multiplicity(
    I_V: IdealGens, I_W: IdealGens, cap: int | None = None
) -> MultResult:
    """(V, W) = dim C[[x]]/(I_V + I_W), certified from jets of order <= cap."""
    return colength(ideal_sum(I_V, I_W), cap)


def colength_oracle(I: IdealGens, cap: int | None = None) -> MultResult:
    """
    Brute force: row-reduce every multiple x^gamma f_i at order cap and read
    the quotient dimension off the pivots.
    """
    cap = I.order if cap is None else cap
    _check_order(I, cap)
    size = dimension(I.nvars, cap)
    vectors = _multiples(I, cap, skip_zero=False)
    _, pivots = DomainMatrix(vectors, (len(vectors), size), QQ_I).rref()
    value = size - len(pivots)
    if value <= cap:
        return MultResult.finite(value, cap, cap)
    return MultResult.exceeded(cap)
