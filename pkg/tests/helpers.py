"""Shared builders and random generators for the test suites."""

from __future__ import annotations

import random

from jetflow.jets import JetDiffeo, JetVectorField, parse_diffeo, parse_vector_field
from jetflow.numeric.gaussian import gaussian
from jetflow.series import TruncatedSeries, monomials, parse_series

X = ["x"]
XY = ["x", "y"]

_UNITS = [gaussian(1), gaussian(2), gaussian(-1), gaussian((1, 2)), gaussian(0, 1)]


def series(text: str, p: int, names=X) -> TruncatedSeries:
    return parse_series(text, list(names), p)


def diffeo(text: str, p: int, names=X) -> JetDiffeo:
    return parse_diffeo(text, list(names), p)


def field(text: str, p: int, names=X) -> JetVectorField:
    return parse_vector_field(text, list(names), p)


def _higher_terms(rng: random.Random, n: int, p: int, count: int) -> dict:
    terms = {}
    candidates = [alpha for alpha in monomials(n, p) if sum(alpha) >= 2]
    for _ in range(rng.randint(0, count)):
        if not candidates:
            break
        alpha = rng.choice(candidates)
        terms[alpha] = gaussian(rng.randint(-2, 2), rng.choice([0, 0, 1]))
    return terms


def random_components(
    rng: random.Random, n: int, p: int, diagonal: list, strict_lower: bool = True
) -> list[TruncatedSeries]:
    components = []
    for i in range(n):
        coeffs = _higher_terms(rng, n, p, 3)
        for j in range(n):
            alpha = tuple(int(k == j) for k in range(n))
            if j == i:
                coeffs[alpha] = diagonal[i]
            elif j < i and strict_lower:
                coeffs[alpha] = gaussian(rng.randint(-1, 1))
        components.append(TruncatedSeries.from_dict(n, p, coeffs))
    return components


def random_diffeo(
    rng: random.Random, n: int, p: int, unipotent: bool = False
) -> JetDiffeo:
    """Lower-triangular linear part with nonzero diagonal."""
    diagonal = [gaussian(1) if unipotent else rng.choice(_UNITS) for _ in range(n)]
    return JetDiffeo(random_components(rng, n, p, diagonal))


def random_field(
    rng: random.Random, n: int, p: int, nilpotent: bool = False
) -> JetVectorField:
    """Lower-triangular linear part; strictly lower when nilpotent."""
    diagonal = [
        gaussian(0) if nilpotent else gaussian(rng.randint(-2, 2), rng.randint(0, 1))
        for _ in range(n)
    ]
    return JetVectorField(random_components(rng, n, p, diagonal))
