from __future__ import annotations

import pytest

from jetflow.errors import DomainError
from jetflow.experiments import ptx_coefficients, ptx_demo, ptx_order_of_zero


class TestPtxCoefficients:
    """Test coefficients of the P_t family."""

    def test_vanishing_rule(self):
        """Test that at t = 24 exactly the divisors of 24 vanish."""
        coefficients = ptx_coefficients(24, 8)
        vanishing = [c.j for c in coefficients if c.vanishes]
        assert vanishing == [1, 2, 3, 4, 6, 8]

    def test_magnitudes(self):
        """Test the numeric magnitude |2 sin(pi t/j)|."""
        coefficients = ptx_coefficients(1, 2)
        assert coefficients[0].magnitude < 1e-12
        assert coefficients[1].magnitude == pytest.approx(2.0)

    def test_order_of_zero(self):
        """Test the first surviving coefficient."""
        assert ptx_order_of_zero(ptx_coefficients(6, 6)) == 4

    def test_all_vanishing(self):
        """Test that no surviving coefficient gives None."""
        assert ptx_order_of_zero(ptx_coefficients(12, 4)) is None

    def test_order(self):
        """Test that the order must be positive."""
        with pytest.raises(DomainError):
            ptx_coefficients(1, 0)


class TestPtxDemo:
    """Test the order of vanishing at t = (p-1)!."""

    @pytest.mark.parametrize("prime", [2, 3, 5, 7])
    def test_primes(self, prime):
        """Test that P_t vanishes to order p at t = (p-1)!."""
        assert ptx_demo(prime, 12) == prime

    def test_default_order(self):
        """Test that the order defaults to the prime."""
        assert ptx_demo(5) == 5

    def test_not_prime(self):
        """Test that composite input is rejected."""
        with pytest.raises(DomainError):
            ptx_demo(6, 12)

    def test_order_below_prime(self):
        """Test that the order must reach the prime."""
        with pytest.raises(DomainError):
            ptx_demo(7, 5)
