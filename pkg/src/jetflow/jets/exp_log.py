"""
Exponential of vector fields with nilpotent linear part and logarithm of
diffeomorphisms with unipotent linear part. Both series are finite on the
jet space, so every coefficient stays exact.
"""

from __future__ import annotations

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from jetflow.errors import DomainError, UnsupportedError, VerificationError
from jetflow.numeric.linalg import identity, is_zero
from jetflow.series import (
    MonomialImages,
    TruncatedSeries,
    dimension,
    identity_components,
    monomials,
    ts_add,
    ts_scale,
    ts_sub,
)
from jetflow.utils import get_logger

from .diffeo import JetDiffeo, has_unipotent_linear_part
from .vector_field import JetVectorField, has_nilpotent_linear_part, vf_apply

logger = get_logger(__name__)


def exp_vf(V: JetVectorField) -> JetDiffeo:
    """
    Time-one map of V: the images sum_k V^k(x_i)/k! of the coordinates.
    """
    if not has_nilpotent_linear_part(V):
        raise UnsupportedError(
            "exp_vf requires a nilpotent linear part; use the symbolic flow "
            "operator for general vector fields"
        )

    n, p = V.nvars, V.order
    bound = dimension(n, p)
    components = []
    for x in identity_components(n, p):
        total, term = x, x
        for k in range(1, bound + 1):
            term = ts_scale(vf_apply(V, term), QQ_I.one / k)
            if term.is_zero():
                break
            total = ts_add(total, term)
        else:
            raise VerificationError("exponential series did not terminate")
        components.append(total)
    return JetDiffeo(components)


def _log_series(
    images: MonomialImages, f: TruncatedSeries, bound: int
) -> TruncatedSeries:
    """sum (-1)^(k+1) (A - I)^k f / k with (A - I) f = f o F - f."""
    total = TruncatedSeries.zero(f.nvars, images.order)
    term = f
    for k in range(1, bound + 1):
        term = ts_sub(images.compose(term), term)
        if term.is_zero():
            return total
        sign = QQ_I.one if k % 2 else -QQ_I.one
        total = ts_add(total, ts_scale(term, sign / k))
    raise VerificationError("logarithm series did not terminate")


def _check_leibniz(images: MonomialImages, V: JetVectorField, bound: int) -> None:
    """log(A) x^alpha must equal V(x^alpha) on every degree-two monomial."""
    n, p = V.nvars, V.order
    for alpha in monomials(n, min(p, 2)):
        if sum(alpha) != 2:
            continue
        monomial = TruncatedSeries.monomial(n, p, alpha)
        if _log_series(images, monomial, bound) != vf_apply(V, monomial):
            raise VerificationError(
                f"logarithm violates the Leibniz rule on x^{alpha}"
            )


def log_unipotent(F: JetDiffeo) -> JetVectorField:
    """
    The vector field V with exp_vf(V) = F, from the finite series
    log(A) = sum (-1)^(k+1) (A - I)^k / k on the coordinate functions.
    """
    if not has_unipotent_linear_part(F):
        raise DomainError("log_unipotent requires a unipotent linear part")

    images = MonomialImages(F.components, F.order)
    bound = dimension(F.nvars, F.order)
    V = JetVectorField(
        [
            _log_series(images, x, bound)
            for x in identity_components(F.nvars, F.order)
        ]
    )
    _check_leibniz(images, V, bound)
    if exp_vf(V) != F:
        raise VerificationError("exp(log F) does not reproduce F")
    logger.debug("logarithm of a unipotent jet: %r", V)
    return V


def nilpotent_exp_matrix(N: DomainMatrix) -> DomainMatrix:
    """exp(N) for a nilpotent matrix, as a finite sum."""
    size = N.shape[0]
    result = identity(size)
    term = identity(size)
    for k in range(1, size + 1):
        term = term * N * (QQ_I.one / k)
        if is_zero(term):
            return result
        result = result + term
    raise DomainError("matrix is not nilpotent")


def unipotent_log_matrix(U: DomainMatrix) -> DomainMatrix:
    """log(U) for a unipotent matrix, as a finite sum."""
    size = U.shape[0]
    N = U - identity(size)
    result = N * QQ_I.zero
    power = identity(size)
    for k in range(1, size + 1):
        power = power * N
        if is_zero(power):
            return result
        sign = QQ_I.one if k % 2 else -QQ_I.one
        result = result + power * (sign / k)
    raise DomainError("matrix is not unipotent")
