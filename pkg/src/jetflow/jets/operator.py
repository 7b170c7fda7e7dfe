"""
Induced linear operators on the jet space C_p[[x]].

Column alpha of the stored matrix holds the coefficients of the image of
x^alpha on the deglex basis, so matrix[beta][alpha] is the matrix
coefficient rho_{alpha, beta}. A diffeomorphism acts by f -> f o F, hence
as_operator(F o G) = as_operator(G) * as_operator(F).
"""

from __future__ import annotations

from typing import Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import GaussianRational
from jetflow.series import (
    MonomialImages,
    TruncatedSeries,
    monomial_index,
    monomial_label,
    monomials,
)
from jetflow.series.multi_index import Monomial, unit_vector

from .diffeo import JetDiffeo
from .vector_field import JetVectorField, vf_apply


class JetOperator:
    """
    Exact D x D matrix on the deglex monomial basis, D = C(n+p, n).
    """

    __slots__ = ("nvars", "order", "matrix")

    def __init__(self, nvars: int, order: int, matrix: DomainMatrix):
        size = len(monomials(nvars, order))
        if matrix.shape != (size, size):
            raise DomainError(
                f"operator on C_{order}[[x]] in {nvars} variables must be "
                f"{size}x{size}, got {matrix.shape}"
            )
        self.nvars = nvars
        self.order = order
        self.matrix = matrix

    @classmethod
    def from_columns(
        cls, nvars: int, order: int, columns: Sequence[TruncatedSeries]
    ) -> JetOperator:
        """Builds the operator sending the k-th basis monomial to columns[k]."""
        vectors = [column.dense() for column in columns]
        size = len(vectors)
        rows = [[vectors[col][row] for col in range(size)] for row in range(size)]
        return cls(nvars, order, DomainMatrix(rows, (size, size), QQ_I))

    def basis(self) -> tuple[Monomial, ...]:
        return monomials(self.nvars, self.order)

    def entry(self, alpha: Monomial, beta: Monomial) -> GaussianRational:
        """rho_{alpha, beta}: coefficient of x^beta in the image of x^alpha."""
        index = monomial_index(self.nvars, self.order)
        return self.matrix.to_list()[index[beta]][index[alpha]]

    def column(self, alpha: Monomial) -> TruncatedSeries:
        index = monomial_index(self.nvars, self.order)
        k = index[alpha]
        rows = self.matrix.to_list()
        return TruncatedSeries.from_dict(
            self.nvars,
            self.order,
            {beta: rows[index[beta]][k] for beta in self.basis()},
        )

    def apply(self, f: TruncatedSeries) -> TruncatedSeries:
        """Image of a series under the operator."""
        vector = DomainMatrix([[c] for c in f.dense()], (len(self.basis()), 1), QQ_I)
        image = (self.matrix * vector).to_list()
        return TruncatedSeries.from_dict(
            self.nvars,
            self.order,
            {beta: image[k][0] for k, beta in enumerate(self.basis())},
        )

    def labels(self, names: Sequence[str]) -> list[str]:
        return [monomial_label(alpha, names) for alpha in self.basis()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JetOperator):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.order == other.order
            and self.matrix == other.matrix
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"JetOperator(nvars={self.nvars}, order={self.order})"


def as_operator(F: JetDiffeo) -> JetOperator:
    """Matrix of f -> f o F; column alpha is prod F_i^alpha_i truncated at p."""
    images = MonomialImages(F.components, F.order)
    columns = [images[alpha] for alpha in monomials(F.nvars, F.order)]
    return JetOperator.from_columns(F.nvars, F.order, columns)


def vf_as_operator(V: JetVectorField) -> JetOperator:
    """Matrix of the derivation f -> sum V_i df/dx_i."""
    n, p = V.nvars, V.order
    columns = [
        vf_apply(V, TruncatedSeries.monomial(n, p, alpha)) for alpha in monomials(n, p)
    ]
    return JetOperator.from_columns(n, p, columns)


def coordinate_images(A: JetOperator) -> list[TruncatedSeries]:
    return [A.column(unit_vector(A.nvars, i)) for i in range(A.nvars)]


def components_from_operator(A: JetOperator, kind: str = "diffeo"):
    """
    Reads the images of x_1, ..., x_n as a `JetDiffeo` (kind "diffeo") or a
    `JetVectorField` (kind "field").
    """
    components = coordinate_images(A)
    if kind == "diffeo":
        return JetDiffeo(components)
    if kind == "field":
        return JetVectorField(components)
    raise ValueError(f"unknown kind `{kind}`")


def is_automorphism_operator(A: JetOperator) -> bool:
    """
    True when A(x^(alpha+beta)) = A(x^alpha) A(x^beta) up to truncation for
    all monomials, i.e. A is induced by its coordinate images.
    """
    n, p = A.nvars, A.order
    one = TruncatedSeries.one(n, p)
    if A.column((0,) * n) != one:
        return False
    components = coordinate_images(A)
    if any(component.constant_term() for component in components):
        return False
    images = MonomialImages(components, p)
    index = monomial_index(n, p)
    rows = A.matrix.to_list()
    for alpha in monomials(n, p):
        expected = images.poly(alpha)
        k = index[alpha]
        for beta in monomials(n, p):
            if rows[index[beta]][k] != expected.get(beta, QQ_I.zero):
                return False
    return True


def is_derivation_operator(A: JetOperator) -> bool:
    """
    True when A(x^alpha) = sum alpha_i x^(alpha - e_i) A(x_i) up to
    truncation, i.e. A obeys the Leibniz rule on all monomials.
    """
    n, p = A.nvars, A.order
    if not A.column((0,) * n).is_zero():
        return False
    components = coordinate_images(A)
    if any(component.constant_term() for component in components):
        return False
    field = JetVectorField(components)
    return vf_as_operator(field) == A

