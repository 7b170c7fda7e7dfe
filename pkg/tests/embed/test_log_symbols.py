from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from jetflow.embed import LogSymbolRing
from jetflow.errors import DomainError
from jetflow.numeric.gaussian import gaussian


@pytest.fixture
def involution_ring():
    return LogSymbolRing([gaussian(-1)], [(2,)], [Fraction(-1, 2)])


class TestLogSymbolRing:
    """Test the ring of logarithm symbols modulo branch relations."""

    def test_names(self, involution_ring):
        """Test that every eigenvalue gets a theta and one tau follows."""
        assert involution_ring.names == ["theta1", "tau"]

    def test_theta_reduces_to_tau(self, involution_ring):
        """Test that 2 (theta - tau/2) = 0 eliminates theta."""
        element = involution_ring.normal_form(involution_ring.theta(0))
        assert involution_ring.format(element) == "(1/2)*tau"

    def test_free_symbols(self, involution_ring):
        """Test that only tau is left after elimination."""
        assert involution_ring.free_symbols() == [1]

    def test_linear_coefficients(self, involution_ring):
        """Test coefficients of a linear form in the free symbols."""
        element = involution_ring.theta(0) * 2
        assert involution_ring.linear_coefficients(element) == {1: gaussian(1)}

    def test_nonlinear_rejected(self, involution_ring):
        """Test that a product of symbols is not a linear form."""
        element = involution_ring.tau() * involution_ring.tau()
        with pytest.raises(DomainError):
            involution_ring.linear_coefficients(element)

    def test_evaluation_respects_relations(self, involution_ring):
        """Test that an element and its normal form evaluate alike."""
        element = involution_ring.theta(0) * 3 + involution_ring.tau()
        direct = involution_ring.evaluate(element)
        reduced = involution_ring.evaluate(involution_ring.normal_form(element))
        with mpmath.workdps(30):
            assert abs(direct - reduced) < 1e-25
            assert abs(direct - 5j * mpmath.pi) < 1e-25

    def test_values(self):
        """Test principal logarithms followed by 2 pi i."""
        ring = LogSymbolRing([gaussian(2), gaussian(0, 1)])
        values = ring.values()
        with mpmath.workdps(30):
            assert abs(values[0] - mpmath.log(2)) < 1e-25
            assert abs(values[1] - 0.5j * mpmath.pi) < 1e-25
            assert abs(values[2] - 2j * mpmath.pi) < 1e-25

    def test_without_relations(self):
        """Test that nothing is eliminated without relations."""
        ring = LogSymbolRing([gaussian(2), gaussian(3)])
        element = ring.theta(0) + ring.theta(1) * 2
        assert ring.normal_form(element) == element
        assert ring.format(element) == "theta1 + (2)*theta2"

    def test_zero_format(self, involution_ring):
        """Test that the zero element prints as 0."""
        assert involution_ring.format(involution_ring.zero) == "0"

    def test_zero_eigenvalue(self):
        """Test that zero has no logarithm."""
        with pytest.raises(DomainError):
            LogSymbolRing([gaussian(0)])
