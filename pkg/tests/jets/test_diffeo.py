from __future__ import annotations

import random

import pytest

from jetflow.errors import DomainError, ParseError
from jetflow.jets import (
    JetDiffeo,
    diffeo_compose,
    diffeo_inverse,
    diffeo_nu,
    diffeo_power,
    group_commutator,
    linear_part,
    spectrum,
)
from jetflow.numeric.gaussian import I, gaussian
from jetflow.numeric.linalg import matrix
from jetflow.series import INFINITE

from tests.helpers import XY, diffeo, random_diffeo


class TestJetDiffeo:
    """Test construction of diffeomorphism jets."""

    def test_constant_term_rejected(self):
        """Test that components must vanish at the origin."""
        with pytest.raises(DomainError):
            diffeo("1 + x", 3)

    def test_singular_linear_part(self):
        """Test that a non-invertible linear part is rejected."""
        with pytest.raises(DomainError):
            diffeo("x^2", 3)

    def test_component_count(self):
        """Test that the number of components must match the variables."""
        with pytest.raises(ParseError):
            diffeo("x", 3, XY)

    def test_linear_part(self):
        """Test the linear part matrix."""
        F = diffeo("2*x + y^2 ; x + 4*y", 3, XY)
        assert linear_part(F) == matrix([[2, 0], [1, 4]])


class TestComposeInverse:
    """Test the group operations."""

    def test_compose(self):
        """Test (x+x^2) o (x+x^2) at order 4."""
        F = diffeo("x + x^2", 4)
        assert diffeo_compose(F, F) == diffeo("x + 2*x^2 + 2*x^3 + x^4", 4)

    def test_inverse_linear(self):
        """Test the inverse of a diagonal map."""
        assert diffeo_inverse(diffeo("2*x ; 4*y", 3, XY)) == diffeo(
            "x/2 ; y/4", 3, XY
        )

    def test_inverse_quadratic(self):
        """Test the inverse of x + x^2 at order 4."""
        F = diffeo("x + x^2", 4)
        G = diffeo_inverse(F)
        assert G == diffeo("x - x^2 + 2*x^3 - 5*x^4", 4)
        assert diffeo_compose(F, G) == JetDiffeo.identity(1, 4)
        assert diffeo_compose(G, F) == JetDiffeo.identity(1, 4)

    def test_random_inverses(self):
        """Test F o F^-1 = id on random jets."""
        rng = random.Random(17)
        for _ in range(30):
            n = rng.randint(1, 2)
            F = random_diffeo(rng, n, 4)
            assert diffeo_compose(F, diffeo_inverse(F)) == JetDiffeo.identity(n, 4)

    def test_order_mismatch(self):
        """Test that jets of different orders cannot be composed."""
        with pytest.raises(DomainError):
            diffeo_compose(diffeo("x", 3), diffeo("x", 4))


class TestPower:
    """Test integer powers."""

    def test_power_matches_composition(self):
        """Test that F^3 = F o F o F."""
        F = diffeo("2*x + x^2 ; y + x*y", 4, XY)
        assert diffeo_power(F, 3) == diffeo_compose(F, diffeo_compose(F, F))

    def test_zero_power(self):
        """Test that F^0 is the identity."""
        assert diffeo_power(diffeo("x + x^2", 3), 0) == JetDiffeo.identity(1, 3)

    def test_negative_power(self):
        """Test that F^-2 = (F^-1)^2."""
        F = diffeo("x + x^3", 5)
        G = diffeo_inverse(F)
        assert diffeo_power(F, -2) == diffeo_compose(G, G)


class TestCommutator:
    """Test group commutators."""

    def test_commuting_linear(self):
        """Test that commuting diagonal maps have trivial commutator."""
        F = diffeo("2*x ; 3*y", 3, XY)
        G = diffeo("5*x ; -y", 3, XY)
        assert group_commutator(F, G) == JetDiffeo.identity(2, 3)

    def test_orders_add(self):
        """Test that [x+x^2, x+x^3] = x + c x^4 + ... with c nonzero."""
        g1 = diffeo("x + x^2", 6)
        g2 = diffeo("x + x^3", 6)
        g3 = group_commutator(g1, g2)
        assert diffeo_nu(g3) == 3
        assert g3.components[0].coefficient((4,)) != 0

    def test_iterated(self):
        """Test that [g1, [g1, g2]] has nu = 4."""
        g1 = diffeo("x + x^2", 6)
        g2 = diffeo("x + x^3", 6)
        assert diffeo_nu(group_commutator(g1, group_commutator(g1, g2))) == 4


class TestNuAndSpectrum:
    """Test nu and linear spectra."""

    def test_nu(self):
        """Test nu of simple jets."""
        assert diffeo_nu(diffeo("x + x^2", 3)) == 1
        assert diffeo_nu(diffeo("2*x", 3)) == 0
        assert diffeo_nu(JetDiffeo.identity(2, 3)) == INFINITE

    def test_triangular_spectrum(self):
        """Test that triangular linear parts give the diagonal in order."""
        F = diffeo("2*x ; x + 3*y", 2, XY)
        assert spectrum(F).eigenvalues == (gaussian(2), gaussian(3))

    def test_rotation_spectrum(self):
        """Test the spectrum of a quarter rotation."""
        F = diffeo("-y ; x", 2, XY)
        assert set(spectrum(F).eigenvalues) == {I, -I}

    def test_spectrum_outside_field(self):
        """Test that eigenvalues outside Q(i) raise DomainError."""
        with pytest.raises(DomainError):
            spectrum(diffeo("2*y ; x", 2, XY))
