from __future__ import annotations

import random

import pytest

from jetflow.errors import DomainError
from jetflow.intersect import (
    fixed_point_ideal,
    fixed_point_index,
    index_sequence,
    mu_sequence,
    parse_ideal,
    pullback,
)
from jetflow.jets import JetDiffeo, diffeo_compose, group_commutator

from tests.helpers import XY, diffeo, random_diffeo
from tests.intersect.test_colength import random_ideal


def ideal(text: str, p: int, names=XY):
    return parse_ideal(text, list(names), p)


class TestPullback:
    """Test pullbacks of ideals."""

    def test_identity(self):
        """Test that the identity leaves generators unchanged."""
        I = ideal("y - x^2 ; x^3", 4)
        assert pullback(JetDiffeo.identity(2, 4), I) == I

    def test_diagonal(self):
        """Test diag(2, 4)* (y - x^2) = (y/4 - x^2/4)."""
        F = diffeo("2*x ; 4*y", 4, XY)
        assert pullback(F, ideal("y - x^2", 4)) == ideal("y/4 - x^2/4", 4)

    def test_shear(self):
        """Test (x, y + x^2)* (y) = (y - x^2)."""
        F = diffeo("x ; y + x^2", 4, XY)
        assert pullback(F, ideal("y", 4)) == ideal("y - x^2", 4)

    def test_composition(self):
        """Test pullback(F o G, I) = pullback(F, pullback(G, I))."""
        rng = random.Random(89)
        for _ in range(10):
            F = random_diffeo(rng, 2, 4)
            G = random_diffeo(rng, 2, 4)
            I = random_ideal(rng, 2, 4)
            assert pullback(diffeo_compose(F, G), I) == pullback(F, pullback(G, I))

    def test_order_mismatch(self):
        """Test that orders must agree."""
        with pytest.raises(DomainError):
            pullback(JetDiffeo.identity(2, 3), ideal("y", 4))


class TestMuSequence:
    """Test the sequence mu_k = (F^k* V, W)."""

    def test_preserved_ideal(self):
        """Test that diag(2, 4) preserves (y - x^2) so mu_k = 2."""
        F = diffeo("2*x ; 4*y", 8, XY)
        sequence = mu_sequence(F, ideal("y - x^2", 8), ideal("y", 8), kmax=5)
        assert [str(result) for _, result in sequence] == ["finite:2@2"] * 6

    def test_identity(self):
        """Test that the identity gives a constant sequence."""
        F = JetDiffeo.identity(2, 6)
        sequence = mu_sequence(F, ideal("y - x^3", 6), ideal("y", 6), kmax=3)
        assert [result.value for _, result in sequence] == [3] * 4

    def test_resonant_perturbation(self):
        """Test the bounded sequence of (2x, 4y - x^2) against y - x^2 - x^3."""
        F = diffeo("2*x ; 4*y - x^2", 8, XY)
        sequence = mu_sequence(
            F, ideal("y - x^2 - x^3", 8), ideal("y", 8), kmax=50, cap=8
        )
        values = [result.value for _, result in sequence]
        assert values == [3 if k == 4 else 2 for k in range(51)]
        assert all(result.is_finite for _, result in sequence)
        assert [k for k, _ in sequence] == list(range(51))

    def test_parallel(self):
        """Test that parallel evaluation keeps results in order of k."""
        F = diffeo("2*x ; 4*y - x^2", 8, XY)
        V, W = ideal("y - x^2 - x^3", 8), ideal("y", 8)
        serial = mu_sequence(F, V, W, kmax=6, cap=8)
        parallel = mu_sequence(F, V, W, kmax=6, cap=8, parallel=True, workers=3)
        assert serial == parallel


class TestFixedPointIndex:
    """Test indices of fixed points of iterates."""

    def test_hyperbolic(self):
        """Test that 2x has index 1 for every k."""
        F = diffeo("2*x", 6)
        for k in range(1, 4):
            assert str(fixed_point_index(F, k)) == "finite:1@1"

    def test_parabolic(self):
        """Test that x + x^2 has index 2 for every k."""
        F = diffeo("x + x^2", 6)
        assert [r.value for _, r in index_sequence(F, 4)] == [2, 2, 2, 2]

    def test_involution(self):
        """Test that -x has index 1 and its square is not isolated."""
        F = diffeo("-x", 6)
        assert fixed_point_index(F, 1).value == 1
        assert not fixed_point_index(F, 2).is_finite

    def test_sequence_matches(self):
        """Test that index_sequence agrees with fixed_point_index."""
        F = diffeo("-x + x^2 ; 2*y + x*y", 5, XY)
        sequence = index_sequence(F, 3, parallel=True)
        assert sequence == [(k, fixed_point_index(F, k)) for k in range(1, 4)]

    def test_commutator_growth(self):
        """Test indices 4, 5, 6 along iterated commutators of x + x^2 and x + x^3."""
        g1 = diffeo("x + x^2", 8)
        current = diffeo("x + x^3", 8)
        indices = []
        for _ in range(3):
            current = group_commutator(g1, current)
            indices.append(fixed_point_index(current, 1).value)
        assert indices == [4, 5, 6]

    def test_needs_positive_k(self):
        """Test that k = 0 is rejected."""
        with pytest.raises(DomainError):
            fixed_point_ideal(diffeo("2*x", 3), 0)
