"""
Truncated multivariate power series, elements of C_p[[x]] = C[[x]]/m^(p+1).

Coefficients live in Q(i). Storage is a sparse sympy `PolyElement` over
`QQ_I`; every stored monomial has degree at most the order p.
"""

from __future__ import annotations

import math

from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from sympy import Symbol
from sympy.polys.domains import QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import GaussianRational

from .multi_index import Monomial, deglex_key, degree, monomial_index, unit_vector

INFINITE = math.inf


@lru_cache(maxsize=None)
def series_ring(n: int) -> PolyRing:
    """Polynomial ring Q(i)[x1, ..., xn] holding the series data."""
    if n < 1:
        raise DomainError("a series needs at least one variable")
    return PolyRing([Symbol(f"x{i + 1}") for i in range(n)], QQ_I, grlex)


def _truncated(poly: PolyElement, p: int) -> PolyElement:
    if all(degree(alpha) <= p for alpha in poly.keys()):
        return poly
    return poly.ring.from_dict(
        {alpha: c for alpha, c in poly.items() if degree(alpha) <= p}
    )


class TruncatedSeries:
    """
    Immutable p-jet of a formal power series in `nvars` variables.
    """

    __slots__ = ("nvars", "order", "_poly", "_hash")

    def __init__(self, nvars: int, order: int, poly: PolyElement):
        if order < 0:
            raise DomainError(f"order must be nonnegative, got {order}")
        self.nvars = nvars
        self.order = order
        self._poly = _truncated(poly, order)
        self._hash: int | None = None

    @classmethod
    def from_dict(
        cls,
        nvars: int,
        order: int,
        coeffs: Mapping[Monomial, object],
    ) -> TruncatedSeries:
        ring = series_ring(nvars)
        return cls(nvars, order, ring.from_dict(dict(coeffs)))

    @classmethod
    def zero(cls, nvars: int, order: int) -> TruncatedSeries:
        return cls(nvars, order, series_ring(nvars).zero)

    @classmethod
    def constant(cls, nvars: int, order: int, value: object) -> TruncatedSeries:
        return cls.from_dict(nvars, order, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int, order: int) -> TruncatedSeries:
        return cls.constant(nvars, order, 1)

    @classmethod
    def variable(cls, nvars: int, order: int, i: int) -> TruncatedSeries:
        """The coordinate function x_(i+1)."""
        return cls.from_dict(nvars, order, {unit_vector(nvars, i): 1})

    @classmethod
    def monomial(
        cls, nvars: int, order: int, alpha: Monomial, value: object = 1
    ) -> TruncatedSeries:
        return cls.from_dict(nvars, order, {alpha: value})

    @property
    def poly(self) -> PolyElement:
        return self._poly

    @property
    def coeffs(self) -> dict[Monomial, GaussianRational]:
        return dict(self._poly.items())

    def items(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        """Nonzero terms in deglex order."""
        for alpha in sorted(self._poly.keys(), key=deglex_key):
            yield alpha, self._poly[alpha]

    def coefficient(self, alpha: Monomial) -> GaussianRational:
        if degree(alpha) > self.order:
            raise DomainError(
                f"coefficient of degree {degree(alpha)} requested from a "
                f"series known to order {self.order}"
            )
        return self._poly.get(alpha, QQ_I.zero)

    def constant_term(self) -> GaussianRational:
        return self._poly.get((0,) * self.nvars, QQ_I.zero)

    def is_zero(self) -> bool:
        return not self._poly

    def dense(self) -> list[GaussianRational]:
        """Coefficient vector on the deglex basis of C_p[[x]]."""
        vector = [QQ_I.zero] * len(monomial_index(self.nvars, self.order))
        index = monomial_index(self.nvars, self.order)
        for alpha, c in self._poly.items():
            vector[index[alpha]] = c
        return vector

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.order == other.order
            and self._poly == other._poly
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.nvars, self.order, frozenset(self._poly.items()))
            )
        return self._hash

    def __repr__(self) -> str:
        from .text import format_series

        return f"TruncatedSeries({format_series(self)!r}, order={self.order})"

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return ts_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return ts_sub(self, other)

    def __neg__(self) -> TruncatedSeries:
        return ts_neg(self)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return ts_mul(self, other)


def _check_nvars(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.nvars != b.nvars:
        raise DomainError(
            f"series in {a.nvars} and {b.nvars} variables cannot be combined"
        )


def ts_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_nvars(a, b)
    return TruncatedSeries(a.nvars, min(a.order, b.order), a.poly + b.poly)


def ts_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_nvars(a, b)
    return TruncatedSeries(a.nvars, min(a.order, b.order), a.poly - b.poly)


def ts_neg(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(a.nvars, a.order, -a.poly)


def ts_scale(a: TruncatedSeries, c: object) -> TruncatedSeries:
    return TruncatedSeries(a.nvars, a.order, a.poly.mul_ground(QQ_I.convert(c)))


def mul_truncated(a: PolyElement, b: PolyElement, p: int) -> PolyElement:
    """Product of raw series data, dropping monomials above degree p."""
    if not a or not b:
        return a.ring.zero
    product: dict[Monomial, GaussianRational] = {}
    zero = QQ_I.zero
    for alpha, c in a.items():
        room = p - degree(alpha)
        if room < 0:
            continue
        for beta, d in b.items():
            if degree(beta) > room:
                continue
            gamma = tuple(x + y for x, y in zip(alpha, beta))
            product[gamma] = product.get(gamma, zero) + c * d
    return a.ring.from_dict(product)


def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product truncated at the smaller order."""
    _check_nvars(a, b)
    p = min(a.order, b.order)
    return TruncatedSeries(a.nvars, p, mul_truncated(a.poly, b.poly, p))


def ts_truncate(a: TruncatedSeries, q: int) -> TruncatedSeries:
    """Jet projection C_p[[x]] -> C_q[[x]] for q <= p."""
    if q > a.order:
        raise DomainError(
            f"cannot extend a series known to order {a.order} to order {q}"
        )
    return TruncatedSeries(a.nvars, q, a.poly)


def ts_order(a: TruncatedSeries) -> int | float:
    """
    Order of vanishing; `INFINITE` when the jet is zero, meaning the true
    order is at least p + 1.
    """
    if a.is_zero():
        return INFINITE
    return min(degree(alpha) for alpha in a.poly.keys())


def ts_diff(a: TruncatedSeries, i: int) -> TruncatedSeries:
    """Partial derivative in x_(i+1); the result is known to order p - 1."""
    if a.order == 0:
        raise DomainError("cannot differentiate a 0-jet")
    return TruncatedSeries(a.nvars, a.order - 1, a.poly.diff(i))


def ts_invert_unit(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a unit, as a geometric series."""
    c = a.constant_term()
    if not c:
        raise DomainError("series with zero constant term is not invertible")

    p = a.order
    inverse_c = QQ_I.one / c
    # a = c (1 - h) with h in m
    h = (a.poly.ring.one - a.poly.mul_ground(inverse_c))
    result = a.poly.ring.one
    power = a.poly.ring.one
    for _ in range(p):
        power = mul_truncated(power, h, p)
        if not power:
            break
        result = result + power
    return TruncatedSeries(a.nvars, p, result.mul_ground(inverse_c))


def ts_from_rational(
    numerator: TruncatedSeries, denominator: TruncatedSeries
) -> TruncatedSeries:
    """numerator / denominator for a unit denominator."""
    return ts_mul(numerator, ts_invert_unit(denominator))


def _check_inner(g: Sequence[TruncatedSeries], expected: int) -> int:
    if len(g) != expected:
        raise DomainError(f"composition needs {expected} inner series, got {len(g)}")
    if not g:
        raise DomainError("composition needs at least one inner series")

    n = g[0].nvars
    for index, inner in enumerate(g):
        if inner.nvars != n:
            raise DomainError("inner series must share their number of variables")
        if inner.constant_term():
            raise DomainError(
                f"inner series {index + 1} has a nonzero constant term; "
                "substitution is only defined for series in m"
            )
    return n


class MonomialImages:
    """
    Memoized truncated products prod g_i^alpha_i, each built from the image
    of alpha - e_j times g_j for the first nonzero exponent j.
    """

    def __init__(self, g: Sequence[TruncatedSeries], order: int):
        self.nvars = _check_inner(g, len(g))
        self.order = min([order, *(inner.order for inner in g)])
        self._inner = [_truncated(inner.poly, self.order) for inner in g]
        self._cache: dict[Monomial, PolyElement] = {
            (0,) * len(g): series_ring(self.nvars).one
        }

    def poly(self, alpha: Monomial) -> PolyElement:
        cached = self._cache.get(alpha)
        if cached is not None:
            return cached
        j = next(i for i, a in enumerate(alpha) if a)
        previous = tuple(a - (i == j) for i, a in enumerate(alpha))
        value = mul_truncated(self.poly(previous), self._inner[j], self.order)
        self._cache[alpha] = value
        return value

    def __getitem__(self, alpha: Monomial) -> TruncatedSeries:
        return TruncatedSeries(self.nvars, self.order, self.poly(alpha))

    def compose(self, f: TruncatedSeries) -> TruncatedSeries:
        """f(g_1, ..., g_m) at the common order."""
        p = min(self.order, f.order)
        result = series_ring(self.nvars).zero
        for alpha, c in f.items():
            if degree(alpha) > p:
                break
            result = result + self.poly(alpha).mul_ground(c)
        return TruncatedSeries(self.nvars, p, result)


def ts_compose(f: TruncatedSeries, g: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """
    f(g_1, ..., g_m) for series g_i without constant term, truncated at the
    smallest order involved.
    """
    _check_inner(g, f.nvars)
    return MonomialImages(g, f.order).compose(f)


def identity_components(n: int, p: int) -> list[TruncatedSeries]:
    return [TruncatedSeries.variable(n, p, i) for i in range(n)]
