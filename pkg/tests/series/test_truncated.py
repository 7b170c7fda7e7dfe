from __future__ import annotations

import random

import pytest

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import gaussian
from jetflow.series import (
    INFINITE,
    TruncatedSeries,
    parse_series,
    ts_add,
    ts_compose,
    ts_diff,
    ts_invert_unit,
    ts_mul,
    ts_order,
    ts_truncate,
)

XY = ["x", "y"]


def s(text: str, p: int, names=("x",)) -> TruncatedSeries:
    return parse_series(text, list(names), p)


def random_series(rng: random.Random, n: int, p: int, constant: bool = True):
    coeffs = {}
    for _ in range(rng.randint(0, 4)):
        alpha = tuple(rng.randint(0, 2) for _ in range(n))
        if sum(alpha) > p or (not constant and sum(alpha) == 0):
            continue
        coeffs[alpha] = gaussian(rng.randint(-3, 3), rng.randint(-1, 1))
    return TruncatedSeries.from_dict(n, p, coeffs)


class TestArithmetic:
    """Test ring operations of truncated series."""

    def test_difference_of_squares(self):
        """Test (1+x)(1-x) = 1 - x^2 at order 2."""
        assert ts_mul(s("1+x", 2), s("1-x", 2)) == s("1-x^2", 2)

    def test_truncated_square(self):
        """Test that x*x vanishes at order 1."""
        assert ts_mul(s("x", 1), s("x", 1)).is_zero()

    def test_binomial(self):
        """Test (1+x+y)^2 at order 2."""
        f = s("1+x+y", 2, XY)
        assert ts_mul(f, f) == s("1+2*x+2*y+x^2+2*x*y+y^2", 2, XY)

    def test_min_order(self):
        """Test that the result order is the smaller order."""
        assert ts_add(s("x", 3), s("x^2", 5)).order == 3

    def test_nvars_mismatch(self):
        """Test that combining different variable counts raises DomainError."""
        with pytest.raises(DomainError):
            ts_add(s("x", 2), s("x", 2, XY))

    def test_ring_axioms(self):
        """Test associativity and distributivity on random samples."""
        rng = random.Random(11)
        for _ in range(100):
            a, b, c = (random_series(rng, 2, 4) for _ in range(3))
            assert ts_mul(ts_mul(a, b), c) == ts_mul(a, ts_mul(b, c))
            assert ts_mul(a, ts_add(b, c)) == ts_add(ts_mul(a, b), ts_mul(a, c))


class TestCompose:
    """Test substitution of series."""

    def test_square(self):
        """Test x^2 composed with x+y."""
        f = TruncatedSeries.from_dict(1, 2, {(2,): 1})
        assert ts_compose(f, [s("x+y", 2, XY)]) == s("x^2+2*x*y+y^2", 2, XY)

    def test_identity(self):
        """Test that composing with coordinates is the identity."""
        f = s("1 + x - 3*x*y + y^3", 4, XY)
        assert ts_compose(f, [s("x", 4, XY), s("y", 4, XY)]) == f

    def test_geometric(self):
        """Test x/(1-x) composed with x+x^2."""
        assert ts_compose(s("x/(1-x)", 4), [s("x+x^2", 4)]) == s(
            "x + 2*x^2 + 3*x^3 + 5*x^4", 4
        )

    def test_constant_term_rejected(self):
        """Test that inner series must vanish at the origin."""
        with pytest.raises(DomainError):
            ts_compose(s("x", 3), [s("1+x", 3)])

    def test_associative(self):
        """Test f(g(h)) = (f(g))(h) on random tuples."""
        rng = random.Random(5)
        for _ in range(40):
            f = random_series(rng, 2, 4)
            g = [random_series(rng, 2, 4, constant=False) for _ in range(2)]
            h = [random_series(rng, 2, 4, constant=False) for _ in range(2)]
            g_of_h = [ts_compose(gi, h) for gi in g]
            assert ts_compose(f, g_of_h) == ts_compose(ts_compose(f, g), h)


class TestInvertUnit:
    """Test inverses of units."""

    def test_geometric(self):
        """Test 1/(1-x) at order 3."""
        assert ts_invert_unit(s("1-x", 3)) == s("1+x+x^2+x^3", 3)

    def test_constant(self):
        """Test that the inverse of a constant is its reciprocal."""
        assert ts_invert_unit(s("4", 3)) == s("1/4", 3)

    def test_two_variables(self):
        """Test 1/(1+x+y) at order 2."""
        f = s("1+x+y", 2, XY)
        inverse = ts_invert_unit(f)
        assert inverse == s("1 - x - y + x^2 + 2*x*y + y^2", 2, XY)
        assert ts_mul(f, inverse) == TruncatedSeries.one(2, 2)

    def test_zero_constant(self):
        """Test that non-units raise DomainError."""
        with pytest.raises(DomainError):
            ts_invert_unit(s("x", 3))


class TestOrder:
    """Test order of vanishing."""

    def test_orders(self):
        """Test orders of simple series."""
        assert ts_order(s("x^2+x^3", 4)) == 2
        assert ts_order(TruncatedSeries.zero(1, 5)) == INFINITE
        assert ts_order(s("(x+y)^3", 4, XY)) == 3

    def test_product(self):
        """Test the truncation-aware order of products."""
        rng = random.Random(2)
        p = 5
        for _ in range(60):
            a = random_series(rng, 2, p)
            b = random_series(rng, 2, p)
            expected = ts_order(a) + ts_order(b)
            if expected > p:
                assert ts_order(ts_mul(a, b)) == INFINITE
            else:
                assert ts_order(ts_mul(a, b)) == expected


class TestHelpers:
    """Test derivative and truncation helpers."""

    def test_diff(self):
        """Test that differentiation drops the order by one."""
        d = ts_diff(s("x^3 + x*y", 3, XY), 0)
        assert d == s("3*x^2 + y", 2, XY)

    def test_truncate(self):
        """Test jet projection."""
        assert ts_truncate(s("x + x^2 + x^3", 3), 2) == s("x + x^2", 2)

    def test_truncate_cannot_extend(self):
        """Test that missing tail data is an error."""
        with pytest.raises(DomainError):
            ts_truncate(s("x", 2), 3)
