"""
Finite groups of jets: closure checks, Bochner linearization by averaging
and the order at which jets separate group elements.
"""

from __future__ import annotations

from typing import Sequence

from sympy.polys.domains import QQ_I

from jetflow.errors import GroupError, VerificationError
from jetflow.series import TruncatedSeries, series_ring, ts_truncate

from .diffeo import (
    JetDiffeo,
    apply_linear,
    diffeo_compose,
    linear_part,
)


class FiniteGroupAction:
    """
    Distinct diffeomorphism jets closed under composition at order p.
    """

    __slots__ = ("elements", "nvars", "order")

    def __init__(self, elements: Sequence[JetDiffeo]):
        elements = tuple(elements)
        if not elements:
            raise GroupError("a group needs at least the identity")
        first = elements[0]
        if any(g.nvars != first.nvars or g.order != first.order for g in elements):
            raise GroupError("group elements must share variables and order")
        if len(set(elements)) != len(elements):
            raise GroupError("group elements must be distinct at the stored order")

        self.elements = elements
        self.nvars = first.nvars
        self.order = first.order

        members = set(elements)
        if JetDiffeo.identity(self.nvars, self.order) not in members:
            raise GroupError("element list does not contain the identity")
        for g in elements:
            for h in elements:
                if diffeo_compose(g, h) not in members:
                    raise GroupError(
                        "element list is not closed under composition at "
                        f"order {self.order}"
                    )

    @classmethod
    def generate(
        cls, generators: Sequence[JetDiffeo], max_size: int = 64
    ) -> FiniteGroupAction:
        """Closes `generators` under composition."""
        if not generators:
            raise GroupError("at least one generator is required")
        first = generators[0]
        identity = JetDiffeo.identity(first.nvars, first.order)
        elements = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            next_frontier = []
            for g in frontier:
                for h in generators:
                    product = diffeo_compose(g, h)
                    if product in seen:
                        continue
                    if len(elements) >= max_size:
                        raise GroupError(
                            f"generated group exceeds {max_size} elements; "
                            "generators may have infinite order"
                        )
                    seen.add(product)
                    elements.append(product)
                    next_frontier.append(product)
            frontier = next_frontier
        return cls(elements)

    def __len__(self) -> int:
        return len(self.elements)


def bochner_average(K: FiniteGroupAction) -> JetDiffeo:
    """
    U = (1/|K|) sum_g dg^-1 o g, which conjugates every element of K to its
    linear part: U o h = dh o U.
    """
    n, p = K.nvars, K.order
    total = [series_ring(n).zero for _ in range(n)]
    for g in K.elements:
        averaged = apply_linear(linear_part(g).inv(), g.components)
        total = [acc + component.poly for acc, component in zip(total, averaged)]

    weight = QQ_I.one / len(K)
    U = JetDiffeo([TruncatedSeries(n, p, poly.mul_ground(weight)) for poly in total])

    for h in K.elements:
        left = diffeo_compose(U, h)
        right = JetDiffeo(apply_linear(linear_part(h), U.components))
        if left != right:
            raise VerificationError("averaged map does not linearize the action")
    return U


def jet_determination(K: FiniteGroupAction) -> int:
    """
    Smallest q <= p such that the q-jets of the group elements are pairwise
    distinct.
    """
    for q in range(K.order + 1):
        jets = {
            tuple(ts_truncate(component, q) for component in g.components)
            for g in K.elements
        }
        if len(jets) == len(K):
            return q
    raise GroupError(f"action is not faithful at order {K.order}")
