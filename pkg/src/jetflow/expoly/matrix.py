"""
Square matrices of exponential polynomials on the deglex jet basis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

import mpmath

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import GaussianRational
from jetflow.series import monomial_label, monomials

from .expoly import CharacterKind, ExpPoly, ep_eval_exact, ep_eval_int, ep_eval_num


class ExpPolyMatrix(NamedTuple):
    """M(t) with rows[beta][alpha] the coefficient of x^beta in the image of x^alpha."""

    nvars: int
    order: int
    kind: CharacterKind
    rows: list[list[ExpPoly]]

    def labels(self, names: Sequence[str] | None = None) -> list[str]:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        return [monomial_label(alpha, names) for alpha in monomials(self.nvars, self.order)]

    def t_degree(self) -> int:
        return max(entry.t_degree() for row in self.rows for entry in row)

    def frequencies(self) -> list[GaussianRational]:
        seen: list[GaussianRational] = []
        for row in self.rows:
            for entry in row:
                for value in entry.frequencies():
                    if value not in seen:
                        seen.append(value)
        return seen


def _exact_matrix(values: list[list[GaussianRational]]) -> DomainMatrix:
    size = len(values)
    return DomainMatrix(values, (size, size), QQ_I)


def evaluate_matrix_int(M: ExpPolyMatrix, m: int) -> DomainMatrix:
    """Exact M(m) for a `mult` family at an integer m."""
    if M.kind != CharacterKind.MULT:
        raise DomainError("exact integer evaluation needs a `mult` family")
    return _exact_matrix([[ep_eval_int(entry, m) for entry in row] for row in M.rows])


def evaluate_matrix_exact(M: ExpPolyMatrix, t: int | Fraction) -> DomainMatrix:
    return _exact_matrix([[ep_eval_exact(entry, t) for entry in row] for row in M.rows])


def evaluate_matrix_num(M: ExpPolyMatrix, t: object, dps: int = 30) -> mpmath.matrix:
    size = len(M.rows)
    result = mpmath.matrix(size, size)
    with mpmath.workdps(dps):
        for i, row in enumerate(M.rows):
            for j, entry in enumerate(row):
                if not entry.is_zero():
                    result[i, j] = ep_eval_num(entry, t, dps)
    return result


def operator_rows(M: ExpPolyMatrix, names: Sequence[str] | None = None) -> list[list[str]]:
    """One row per basis monomial: its label followed by the printed entries."""
    labels = M.labels(names)
    return [
        [label] + [str(entry) for entry in row] for label, row in zip(labels, M.rows)
    ]


def operator_csv(M: ExpPolyMatrix, names: Sequence[str] | None = None) -> str:
    """CSV with the deglex labels as header row and first column."""
    header = ",".join(["row"] + M.labels(names))
    lines = [header] + [",".join(row) for row in operator_rows(M, names)]
    return "\n".join(lines)
