"""
Closed form of the flow operator e^(tV) on C_p[[x]].

With a lower-triangular linear part, the row for x^beta of dM/dt = A M only
involves rows of lower degree or of the same degree and later deglex index,
so every entry solves a scalar linear ODE y' = w_beta y + r(t) whose
forcing r is already known.
"""

from __future__ import annotations

from math import perm

import mpmath

from sympy.polys.domains import QQ_I

from jetflow.errors import VerificationError
from jetflow.jets import JetVectorField, vf_as_operator, vf_linear_part
from jetflow.jets.diffeo import require_lower_triangular
from jetflow.numeric.gaussian import GaussianRational
from jetflow.series import degree, monomials, ts_truncate
from jetflow.utils import get_logger

from .expoly import (
    CharacterKind,
    ExpPoly,
    ep_add,
    ep_at_zero,
    ep_dt,
    ep_scale,
    to_mpf,
)
from .matrix import ExpPolyMatrix, evaluate_matrix_num

logger = get_logger(__name__)

EXP = CharacterKind.EXP


def solve_scalar(
    rate: GaussianRational, forcing: ExpPoly, initial: GaussianRational
) -> ExpPoly:
    """
    y with y' = rate * y + forcing and y(0) = initial. A forcing term
    c e^(mu t) t^k has the particular solution e^(mu t) P(t) where
    (mu - rate) P + P' = c t^k, or c e^(mu t) t^(k+1) / (k+1) on resonance.
    """
    terms: dict = {}
    for (mu, k), c in forcing.terms.items():
        if mu == rate:
            key = (mu, k + 1)
            terms[key] = terms.get(key, QQ_I.zero) + c / (k + 1)
            continue
        gap = mu - rate
        scale = QQ_I.one / gap
        for j in range(k + 1):
            key = (mu, k - j)
            term = c * perm(k, j) * scale
            terms[key] = terms.get(key, QQ_I.zero) + (term if j % 2 == 0 else -term)
            scale = scale / gap

    particular = ExpPoly(EXP, terms)
    homogeneous = ExpPoly(EXP, {(rate, 0): initial - ep_at_zero(particular)})
    return ep_add(particular, homogeneous)


def _solve_order(nvars: int, order: int) -> list[int]:
    basis = monomials(nvars, order)
    return sorted(range(len(basis)), key=lambda k: (degree(basis[k]), -k))


def _truncate_field(V: JetVectorField, p: int | None) -> JetVectorField:
    if p is None or p == V.order:
        return V
    return JetVectorField([ts_truncate(component, p) for component in V.components])


def flow_operator(
    V: JetVectorField, p: int | None = None, verify: bool = True
) -> ExpPolyMatrix:
    """
    M(t) = e^(tA) with A = vf_as_operator(V) as a matrix of `exp`
    exponential polynomials; M(0) = I and dM/dt = A M hold exactly.
    """
    V = _truncate_field(V, p)
    require_lower_triangular(vf_linear_part(V), "vector field")

    A = vf_as_operator(V).matrix.to_list()
    size = len(A)
    order = _solve_order(V.nvars, V.order)
    position = {k: rank for rank, k in enumerate(order)}
    dependencies = []
    for beta in order:
        row = [
            (gamma, a)
            for gamma, a in enumerate(A[beta])
            if a and gamma != beta
        ]
        if any(position[gamma] > position[beta] for gamma, _ in row):
            raise VerificationError("operator is not triangular in the solve order")
        dependencies.append((beta, row))

    zero = ExpPoly.zero(EXP)
    columns = []
    for alpha in range(size):
        column = [zero] * size
        for beta, row in dependencies:
            forcing = zero
            for gamma, a in row:
                if not column[gamma].is_zero():
                    forcing = ep_add(forcing, ep_scale(column[gamma], a))
            initial = QQ_I.one if beta == alpha else QQ_I.zero
            if forcing.is_zero() and not initial:
                continue
            column[beta] = solve_scalar(A[beta][beta], forcing, initial)
        columns.append(column)

    rows = [[columns[alpha][beta] for alpha in range(size)] for beta in range(size)]
    M = ExpPolyMatrix(V.nvars, V.order, EXP, rows)
    if verify:
        check_flow_equation(A, M)
    logger.debug(
        "flow operator of size %d with frequencies %s", size, M.frequencies()
    )
    return M


def check_flow_equation(A: list[list[GaussianRational]], M: ExpPolyMatrix) -> None:
    """M(0) = I and dM/dt - A M = 0 as exponential polynomial identities."""
    size = len(A)
    for beta in range(size):
        for alpha in range(size):
            expected = QQ_I.one if alpha == beta else QQ_I.zero
            if ep_at_zero(M.rows[beta][alpha]) != expected:
                raise VerificationError("flow operator is not the identity at t = 0")

            derivative = ep_dt(M.rows[beta][alpha])
            product = ExpPoly.zero(EXP)
            for gamma, a in enumerate(A[beta]):
                if a:
                    product = ep_add(product, ep_scale(M.rows[gamma][alpha], a))
            if derivative != product:
                raise VerificationError("flow operator violates dM/dt = A M")


def group_law_residual(M: ExpPolyMatrix, s: object, t: object, dps: int = 30) -> float:
    """max |M(s) M(t) - M(s + t)| over all entries, evaluated numerically."""
    with mpmath.workdps(dps):
        left = evaluate_matrix_num(M, s, dps) * evaluate_matrix_num(M, t, dps)
        right = evaluate_matrix_num(M, to_mpf(s) + to_mpf(t), dps)
        return float(mpmath.mnorm(left - right, mpmath.inf))
