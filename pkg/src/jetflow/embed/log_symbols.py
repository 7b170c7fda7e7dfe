"""
Coefficients involving logarithms of eigenvalues.

Elements are polynomials over Q(i) in formal symbols theta_1, ..., theta_n
and tau, taken modulo the linear relations
sum e_i (theta_i + delta_i tau) = 0 for e in the relation lattice of the
eigenvalues. Evaluation sends theta_i to the principal logarithm of
lambda_i and tau to 2 pi i; the relations hold numerically for the chosen
branch corrections delta, so evaluation is a ring homomorphism.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import mpmath

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import GaussianRational, format_gaussian, to_mpc
from jetflow.series import monomial_label

TAU = "tau"


def fraction_element(value: Fraction) -> GaussianRational:
    return QQ_I.convert(value.numerator) / QQ_I.convert(value.denominator)


class LogSymbolRing:
    """Q(i)[theta, tau] modulo the branch relations of `lambdas`."""

    def __init__(
        self,
        lambdas: Sequence[GaussianRational],
        relations: Sequence[Sequence[int]] = (),
        delta: Sequence[Fraction] | None = None,
    ):
        if any(not value for value in lambdas):
            raise DomainError("logarithms of zero eigenvalues do not exist")
        self.lambdas = tuple(lambdas)
        n = len(self.lambdas)
        self.names = [f"theta{i + 1}" for i in range(n)] + [TAU]
        self.ring = PolyRing(self.names, QQ_I, lex)
        self.delta = tuple(delta) if delta is not None else (Fraction(0),) * n

        rows = []
        for e in relations:
            twist = sum((Fraction(a) * d for a, d in zip(e, self.delta)), Fraction(0))
            rows.append([QQ_I.convert(a) for a in e] + [fraction_element(twist)])

        self._substitutions: list[tuple[PolyElement, PolyElement]] = []
        self.pivots: tuple[int, ...] = ()
        if rows:
            reduced, pivots = DomainMatrix(rows, (len(rows), n + 1), QQ_I).rref()
            gens = self.ring.gens
            for row, pivot in zip(reduced.to_list(), pivots):
                replacement = self.ring.zero
                for j, c in enumerate(row):
                    if j != pivot and c:
                        replacement -= gens[j] * c
                self._substitutions.append((gens[pivot], replacement))
            self.pivots = tuple(pivots)

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    def theta(self, i: int) -> PolyElement:
        return self.ring.gens[i]

    def tau(self) -> PolyElement:
        return self.ring.gens[-1]

    def free_symbols(self) -> list[int]:
        """Indices of the symbols left after eliminating the relations."""
        return [j for j in range(len(self.names)) if j not in self.pivots]

    def normal_form(self, element: PolyElement) -> PolyElement:
        for generator, replacement in self._substitutions:
            element = element.compose(generator, replacement)
        return element

    def linear_coefficients(self, element: PolyElement) -> dict[int, GaussianRational]:
        """Coefficient of each free symbol in a linear element."""
        coefficients = {}
        for monom, c in self.normal_form(element).terms():
            if sum(monom) != 1:
                raise DomainError("element is not a linear form in the symbols")
            coefficients[monom.index(1)] = c
        return coefficients

    def values(self, dps: int = 30) -> list[mpmath.mpc]:
        """Principal logarithms of the eigenvalues, then 2 pi i."""
        with mpmath.workdps(dps):
            logs = [mpmath.log(to_mpc(value)) for value in self.lambdas]
            return logs + [2j * mpmath.pi]

    def evaluate(self, element: PolyElement, dps: int = 30) -> mpmath.mpc:
        values = self.values(dps)
        with mpmath.workdps(dps):
            total = mpmath.mpc(0)
            for monom, c in element.terms():
                term = to_mpc(c)
                for value, power in zip(values, monom):
                    if power:
                        term *= value**power
                total += term
            return +total

    def format(self, element: PolyElement) -> str:
        terms = []
        for monom, c in sorted(self.normal_form(element).terms(), reverse=True):
            label = monomial_label(monom, self.names)
            coefficient = format_gaussian(c, star=True)
            if label == "1":
                terms.append(coefficient)
            elif coefficient == "1":
                terms.append(label)
            else:
                terms.append(f"({coefficient})*{label}")
        return " + ".join(terms) if terms else "0"
