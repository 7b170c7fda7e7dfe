"""
Ideals moved by a diffeomorphism: pullbacks g*V, the sequence
mu_k = (F^k* V, W) and fixed point indices of iterates.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from jetflow.config import DEFAULTS
from jetflow.errors import DomainError
from jetflow.jets import JetDiffeo, diffeo_compose, diffeo_inverse
from jetflow.jets.diffeo import compose_components
from jetflow.series import identity_components, ts_sub
from jetflow.utils import get_logger

from .colength import colength, multiplicity
from .models import IdealGens, MultResult

logger = get_logger(__name__)

T = TypeVar("T")


def _check_shared(F: JetDiffeo, I: IdealGens) -> None:
    if F.nvars != I.nvars or F.order != I.order:
        raise DomainError(
            f"diffeomorphism ({F.nvars} vars, order {F.order}) and ideal "
            f"({I.nvars} vars, order {I.order}) do not match"
        )


def _substitute(I: IdealGens, G: JetDiffeo) -> IdealGens:
    """Generators v_i o G."""
    return IdealGens(compose_components(I.gens, G.components))


def pullback(F: JetDiffeo, I: IdealGens) -> IdealGens:
    """
    F*I with generators v_i o F^-1, so that
    pullback(F o G, I) = pullback(F, pullback(G, I)).
    """
    _check_shared(F, I)
    return _substitute(I, diffeo_inverse(F))


def iterates(F: JetDiffeo, kmax: int, start: int = 0) -> list[JetDiffeo]:
    """F^start, ..., F^kmax with F^(k+1) = F o F^k."""
    current = JetDiffeo.identity(F.nvars, F.order)
    powers = []
    for k in range(kmax + 1):
        if k >= start:
            powers.append(current)
        if k < kmax:
            current = diffeo_compose(F, current)
    return powers


def _evaluate(
    function: Callable[[T], MultResult],
    items: Sequence[T],
    parallel: bool,
    workers: int,
) -> list[MultResult]:
    if parallel and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(function, items))
    return [function(item) for item in items]


def mu_sequence(
    F: JetDiffeo,
    I_V: IdealGens,
    I_W: IdealGens,
    kmax: int,
    cap: int | None = None,
    parallel: bool = False,
    workers: int = DEFAULTS.parallel_workers,
) -> list[tuple[int, MultResult]]:
    """
    mu_k = (F^k* V, W) for k = 0..kmax. The inverse powers are built
    incrementally; the multiplicities are independent and may run in a
    thread pool, results stay in order of k.
    """
    _check_shared(F, I_V)
    _check_shared(F, I_W)
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")

    inverse_powers = iterates(diffeo_inverse(F), kmax)
    pulled = [_substitute(I_V, G) for G in inverse_powers]

    def mu(I: IdealGens) -> MultResult:
        return multiplicity(I, I_W, cap)

    results = _evaluate(mu, pulled, parallel, workers)
    for k, result in enumerate(results):
        logger.debug("mu_%d = %s", k, result)
    return list(enumerate(results))


def fixed_point_ideal(F: JetDiffeo, k: int = 1) -> IdealGens:
    """(F^k_1 - x_1, ..., F^k_n - x_n)."""
    if k < 1:
        raise DomainError("fixed point ideals need k >= 1")
    power = iterates(F, k, start=k)[0]
    return _fixed_point_ideal(power)


def _fixed_point_ideal(power: JetDiffeo) -> IdealGens:
    coordinates = identity_components(power.nvars, power.order)
    return IdealGens([ts_sub(f, x) for f, x in zip(power.components, coordinates)])


def fixed_point_index(F: JetDiffeo, k: int = 1, cap: int | None = None) -> MultResult:
    """Index of 0 as a fixed point of F^k: the colength of its fixed point ideal."""
    return colength(fixed_point_ideal(F, k), cap)


def index_sequence(
    F: JetDiffeo,
    kmax: int,
    cap: int | None = None,
    parallel: bool = False,
    workers: int = DEFAULTS.parallel_workers,
) -> list[tuple[int, MultResult]]:
    """fixed_point_index(F, k) for k = 1..kmax."""
    if kmax < 1:
        raise DomainError("kmax must be at least 1")
    ideals = [_fixed_point_ideal(power) for power in iterates(F, kmax, start=1)]

    def index(I: IdealGens) -> MultResult:
        return colength(I, cap)

    results = _evaluate(index, ideals, parallel, workers)
    return [(k + 1, result) for k, result in enumerate(results)]
