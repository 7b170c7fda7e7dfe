from __future__ import annotations

import random

from jetflow.jets import (
    JetDiffeo,
    as_operator,
    components_from_operator,
    diffeo_compose,
    is_automorphism_operator,
    is_derivation_operator,
    jet_spectrum,
    vf_as_operator,
)
from jetflow.numeric.gaussian import gaussian
from jetflow.numeric.linalg import identity, matrix
from jetflow.series import TruncatedSeries, monomials, mul_truncated

from tests.helpers import XY, diffeo, field, random_diffeo, random_field


class TestAsOperator:
    """Test the induced operator of a diffeomorphism."""

    def test_identity(self):
        """Test that the identity induces the identity matrix."""
        assert as_operator(JetDiffeo.identity(2, 3)).matrix == identity(10)

    def test_scaling(self):
        """Test that 2x acts diagonally by 1, 2, 4."""
        assert as_operator(diffeo("2*x", 2)).matrix == matrix(
            [[1, 0, 0], [0, 2, 0], [0, 0, 4]]
        )

    def test_unitriangular(self):
        """Test the columns of x + x^2 at order 2."""
        A = as_operator(diffeo("x + x^2", 2))
        assert A.matrix == matrix([[1, 0, 0], [0, 1, 0], [0, 1, 1]])
        assert A.entry((1,), (2,)) == gaussian(1)

    def test_composition_order(self):
        """Test as_operator(F o G) = as_operator(G) as_operator(F)."""
        rng = random.Random(23)
        for _ in range(100):
            n = rng.randint(1, 2)
            F = random_diffeo(rng, n, 3)
            G = random_diffeo(rng, n, 3)
            assert (
                as_operator(diffeo_compose(F, G)).matrix
                == as_operator(G).matrix * as_operator(F).matrix
            )

    def test_multiplicative(self):
        """Test A(x^(a+b)) = A(x^a) A(x^b) on monomial pairs."""
        rng = random.Random(29)
        for _ in range(20):
            F = random_diffeo(rng, 2, 4)
            A = as_operator(F)
            basis = monomials(2, 4)
            for alpha in basis:
                for beta in basis:
                    if sum(alpha) + sum(beta) > 4:
                        continue
                    gamma = tuple(a + b for a, b in zip(alpha, beta))
                    product = mul_truncated(
                        A.column(alpha).poly, A.column(beta).poly, 4
                    )
                    assert A.column(gamma).poly == product
            assert is_automorphism_operator(A)

    def test_components_round_trip(self):
        """Test that coordinate images recover the diffeomorphism."""
        F = diffeo("2*x + y^2 ; x + 3*y - x*y", 3, XY)
        assert components_from_operator(as_operator(F)) == F


class TestVfAsOperator:
    """Test the derivation matrix of a vector field."""

    def test_euler(self):
        """Test that x d/dx acts by the degree."""
        assert vf_as_operator(field("x", 2)).matrix == matrix(
            [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
        )

    def test_quadratic(self):
        """Test x^2 d/dx at order 3."""
        A = vf_as_operator(field("x^2", 3))
        assert A.column((1,)) == TruncatedSeries.from_dict(1, 3, {(2,): 1})
        assert A.entry((2,), (3,)) == gaussian(2)
        assert A.column((3,)).is_zero()

    def test_diagonal_is_spectrum(self):
        """Test that the diagonal equals the weights sum alpha_i lambda_i."""
        rng = random.Random(31)
        for _ in range(20):
            V = random_field(rng, 2, 3)
            A = vf_as_operator(V)
            rows = A.matrix.to_list()
            diagonal = [rows[k][k] for k in range(1, len(rows))]
            assert diagonal == jet_spectrum(V)

    def test_leibniz(self):
        """Test that vector field operators are derivations."""
        rng = random.Random(37)
        for _ in range(20):
            V = random_field(rng, 2, 4)
            assert is_derivation_operator(vf_as_operator(V))
        assert not is_derivation_operator(as_operator(diffeo("2*x", 3)))


class TestJetSpectrum:
    """Test weights of vector fields."""

    def test_weights(self):
        """Test lambda = (2, 3) at order 2."""
        V = field("2*x ; 3*y", 2, XY)
        assert jet_spectrum(V) == [gaussian(k) for k in (2, 3, 4, 5, 6)]

    def test_zero_linear_part(self):
        """Test that a nilpotent diagonal gives zero weights."""
        V = field("y^2 ; x^2", 3, XY)
        assert all(not weight for weight in jet_spectrum(V))
