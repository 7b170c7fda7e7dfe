"""
Jets of singular vector fields, i.e. derivations of C[[x]] preserving m.
"""

from __future__ import annotations

from typing import Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import GaussianRational
from jetflow.numeric.linalg import diagonal, is_nilpotent
from jetflow.series import (
    TruncatedSeries,
    monomials,
    mul_truncated,
    series_ring,
    ts_sub,
)

from .diffeo import linear_matrix, require_lower_triangular


class JetVectorField:
    """
    p-jet of a vector field sum V_i d/dx_i whose components vanish at 0.
    """

    __slots__ = ("nvars", "order", "components", "_hash")

    def __init__(self, components: Sequence[TruncatedSeries]):
        components = tuple(components)
        if not components:
            raise DomainError("a vector field needs at least one component")
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
                    "a singular vector field must vanish at the origin"
                )

        self.nvars = n
        self.order = orders.pop()
        if self.order < 1:
            raise DomainError("a vector field jet needs order at least 1")
        self.components = components
        self._hash: int | None = None

    @classmethod
    def zero(cls, n: int, p: int) -> JetVectorField:
        return cls([TruncatedSeries.zero(n, p) for _ in range(n)])

    def is_zero(self) -> bool:
        return all(component.is_zero() for component in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JetVectorField):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __repr__(self) -> str:
        from .text import format_components

        return (
            f"JetVectorField({format_components(self.components)!r}, "
            f"order={self.order})"
        )


def vf_linear_part(V: JetVectorField) -> DomainMatrix:
    return linear_matrix(V.components)


def vf_apply(V: JetVectorField, f: TruncatedSeries) -> TruncatedSeries:
    """
    V(f) = sum V_i df/dx_i. Since V_i lies in m the result is known to the
    order of f.
    """
    p = min(V.order, f.order)
    result = series_ring(V.nvars).zero
    for i, component in enumerate(V.components):
        derivative = f.poly.diff(i)
        if derivative:
            result = result + mul_truncated(derivative, component.poly, p)
    return TruncatedSeries(V.nvars, p, result)


def vf_bracket(V: JetVectorField, W: JetVectorField) -> JetVectorField:
    """[V, W] with components V(W_i) - W(V_i)."""
    if V.nvars != W.nvars or V.order != W.order:
        raise DomainError("vector fields must share variables and order")
    return JetVectorField(
        [
            ts_sub(vf_apply(V, w), vf_apply(W, v))
            for v, w in zip(V.components, W.components)
        ]
    )


def has_nilpotent_linear_part(V: JetVectorField) -> bool:
    return is_nilpotent(vf_linear_part(V))


def jet_spectrum(V: JetVectorField, p: int | None = None) -> list[GaussianRational]:
    """
    Weights sum alpha_i lambda_i over the nonconstant deglex monomials of
    degree at most p, lambda being the diagonal of the triangular linear part.
    """
    L = vf_linear_part(V)
    require_lower_triangular(L, "vector field")
    lambdas = diagonal(L)
    p = V.order if p is None else p
    return [
        sum((a * lam for a, lam in zip(alpha, lambdas)), QQ_I.zero)
        for alpha in monomials(V.nvars, p)[1:]
    ]
