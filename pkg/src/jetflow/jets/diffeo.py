"""
Jets of formal diffeomorphisms of (C^n, 0) and their group operations.
"""

from __future__ import annotations

from typing import Sequence

from pydantic import BaseModel, ConfigDict
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import GaussianRational
from jetflow.numeric.linalg import (
    diagonal,
    identity,
    is_lower_triangular,
    is_nilpotent,
    matrix,
    split_eigenvalues,
)
from jetflow.series import (
    INFINITE,
    MonomialImages,
    TruncatedSeries,
    identity_components,
    series_ring,
    ts_order,
    ts_sub,
    ts_truncate,
)
from jetflow.series.multi_index import unit_vector


def linear_matrix(components: Sequence[TruncatedSeries]) -> DomainMatrix:
    """L[i][j] = coefficient of x_j in component i."""
    n = len(components)
    return matrix(
        [
            [component.coefficient(unit_vector(n, j)) for j in range(n)]
            for component in components
        ]
    )


def apply_linear(
    L: DomainMatrix, components: Sequence[TruncatedSeries]
) -> list[TruncatedSeries]:
    """Components of the linear map L applied after `components`."""
    rows = L.to_list()
    n = components[0].nvars
    p = min(component.order for component in components)
    result = []
    for row in rows:
        poly = series_ring(n).zero
        for c, component in zip(row, components):
            if c:
                poly = poly + component.poly.mul_ground(c)
        result.append(TruncatedSeries(n, p, poly))
    return result


class JetDiffeo:
    """
    p-jet of a formal diffeomorphism: the images of x_1, ..., x_n, each
    without constant term, with invertible linear part.
    """

    __slots__ = ("nvars", "order", "components", "_hash")

    def __init__(self, components: Sequence[TruncatedSeries]):
        components = tuple(components)
        if not components:
            raise DomainError("a diffeomorphism needs at least one component")
        n = len(components)
        orders = {component.order for component in components}
        if any(component.nvars != n for component in components):
            raise DomainError(f"all {n} components must be series in {n} variables")
        if len(orders) != 1:
            raise DomainError(f"components carry different orders {sorted(orders)}")
        for index, component in enumerate(components):
            if component.constant_term():
                raise DomainError(
                    f"component {index + 1} has a nonzero constant term; "
                    "a diffeomorphism germ must fix the origin"
                )

        self.nvars = n
        self.order = orders.pop()
        if self.order < 1:
            raise DomainError("a diffeomorphism jet needs order at least 1")
        self.components = components
        self._hash: int | None = None

        if not linear_matrix(components).det():
            raise DomainError("linear part is not invertible")

    @classmethod
    def identity(cls, n: int, p: int) -> JetDiffeo:
        return cls(identity_components(n, p))

    @classmethod
    def linear(cls, L: DomainMatrix, p: int) -> JetDiffeo:
        n = L.shape[0]
        return cls(apply_linear(L, identity_components(n, p)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JetDiffeo):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __repr__(self) -> str:
        from .text import format_components

        return f"JetDiffeo({format_components(self.components)!r}, order={self.order})"


class Spectrum(BaseModel):
    """Eigenvalues of a linear part, in diagonal order when it is triangular."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: tuple[GaussianRational, ...]


def diffeo_identity(n: int, p: int) -> JetDiffeo:
    return JetDiffeo.identity(n, p)


def linear_part(F: JetDiffeo) -> DomainMatrix:
    return linear_matrix(F.components)


def matrix_spectrum(L: DomainMatrix) -> Spectrum:
    if is_lower_triangular(L):
        return Spectrum(eigenvalues=tuple(diagonal(L)))
    return Spectrum(eigenvalues=tuple(split_eigenvalues(L)))


def spectrum(F: JetDiffeo) -> Spectrum:
    """
    Spectrum of the linear part; raises DomainError when it is not in Q(i).
    """
    return matrix_spectrum(linear_part(F))


def _check_compatible(F: JetDiffeo, G: JetDiffeo) -> None:
    if F.nvars != G.nvars or F.order != G.order:
        raise DomainError(
            f"diffeomorphisms of ({F.nvars} vars, order {F.order}) and "
            f"({G.nvars} vars, order {G.order}) cannot be composed"
        )


def compose_components(
    outer: Sequence[TruncatedSeries], inner: Sequence[TruncatedSeries]
) -> list[TruncatedSeries]:
    """(outer_i o inner) for every i, sharing the monomial images of `inner`."""
    images = MonomialImages(inner, min(f.order for f in outer))
    return [images.compose(f) for f in outer]


def diffeo_compose(F: JetDiffeo, G: JetDiffeo) -> JetDiffeo:
    """F o G, with components F_i(G_1, ..., G_n)."""
    _check_compatible(F, G)
    return JetDiffeo(compose_components(F.components, G.components))


def diffeo_inverse(F: JetDiffeo) -> JetDiffeo:
    """
    Solves F o G = id by the fixed point G = L^-1 (x - H o G), where H is the
    nonlinear part of F; each pass fixes one more degree.
    """
    n, p = F.nvars, F.order
    L = linear_part(F)
    L_inverse = L.inv()
    coordinates = identity_components(n, p)
    nonlinear = [
        ts_sub(component, linear)
        for component, linear in zip(F.components, apply_linear(L, coordinates))
    ]

    G = apply_linear(L_inverse, coordinates)
    for _ in range(p - 1):
        correction = compose_components(nonlinear, G)
        G = apply_linear(
            L_inverse, [ts_sub(x, h) for x, h in zip(coordinates, correction)]
        )
    return JetDiffeo(G)


def diffeo_power(F: JetDiffeo, k: int) -> JetDiffeo:
    """F^k by repeated squaring; negative k through the inverse."""
    if k < 0:
        return diffeo_power(diffeo_inverse(F), -k)

    result = JetDiffeo.identity(F.nvars, F.order)
    base = F
    while k:
        if k & 1:
            result = diffeo_compose(result, base)
        k >>= 1
        if k:
            base = diffeo_compose(base, base)
    return result


def group_commutator(F: JetDiffeo, G: JetDiffeo) -> JetDiffeo:
    """F o G o F^-1 o G^-1."""
    _check_compatible(F, G)
    return diffeo_compose(
        diffeo_compose(F, G),
        diffeo_compose(diffeo_inverse(F), diffeo_inverse(G)),
    )


def diffeo_truncate(F: JetDiffeo, q: int) -> JetDiffeo:
    return JetDiffeo([ts_truncate(component, q) for component in F.components])


def diffeo_nu(F: JetDiffeo) -> int | float:
    """
    nu with F = id + (terms of degree nu + 1); `INFINITE` for the identity jet.
    """
    orders = [
        ts_order(ts_sub(component, x))
        for component, x in zip(
            F.components, identity_components(F.nvars, F.order)
        )
    ]
    lowest = min(orders)
    return INFINITE if lowest == INFINITE else lowest - 1


def has_unipotent_linear_part(F: JetDiffeo) -> bool:
    return is_nilpotent(linear_part(F) - identity(F.nvars))


def require_lower_triangular(L: DomainMatrix, what: str) -> None:
    if not is_lower_triangular(L):
        raise DomainError(f"linear part of the {what} is not lower-triangular")
