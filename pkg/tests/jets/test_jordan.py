from __future__ import annotations

import random

import pytest

from jetflow.errors import DomainError
from jetflow.jets import JetDiffeo, diffeo_compose, jordan_chevalley, multiplicative_jordan
from jetflow.jets.diffeo import has_unipotent_linear_part
from jetflow.numeric.gaussian import gaussian
from jetflow.numeric.linalg import identity, is_nilpotent, matrix, zeros

from tests.helpers import XY, diffeo


def _random_similar(rng: random.Random, size: int):
    """P J P^-1 with J upper triangular having repeated diagonal entries."""
    values = [gaussian(v) for v in rng.sample([1, 2, -1, 3], 2)]
    J = [[0] * size for _ in range(size)]
    for i in range(size):
        J[i][i] = values[i % 2]
        if i + 1 < size and rng.random() < 0.5:
            J[i][i + 1] = 1
    P = [[int(i == j) for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i):
            P[i][j] = rng.randint(-2, 2)
    P = matrix(P)
    return P * matrix(J) * P.inv()


class TestJordanChevalley:
    """Test the additive Jordan-Chevalley decomposition."""

    def test_jordan_block(self):
        """Test that a unipotent block splits into I and E12."""
        S, N = jordan_chevalley(matrix([[1, 1], [0, 1]]))
        assert S == identity(2)
        assert N == matrix([[0, 1], [0, 0]])

    def test_diagonal(self):
        """Test that diagonal matrices are semisimple."""
        M = matrix([[2, 0], [0, 5]])
        S, N = jordan_chevalley(M)
        assert S == M
        assert N == zeros(2, 2)

    def test_distinct_eigenvalues(self):
        """Test that distinct eigenvalues give N = 0."""
        M = matrix([[2, 1], [0, 3]])
        S, N = jordan_chevalley(M)
        assert S == M
        assert N == zeros(2, 2)

    def test_not_split(self):
        """Test that spectra outside Q(i) are rejected."""
        with pytest.raises(DomainError):
            jordan_chevalley(matrix([[0, 3], [1, 0]]))

    def test_random_properties(self):
        """Test S + N = M, SN = NS, nilpotence and commutation with M's polynomials."""
        rng = random.Random(43)
        for _ in range(25):
            size = rng.randint(2, 4)
            M = _random_similar(rng, size)
            S, N = jordan_chevalley(M)
            assert S + N == M
            assert S * N == N * S
            assert is_nilpotent(N)
            X = M * M + M * gaussian(3)
            assert S * X == X * S
            assert N * X == X * N


class TestMultiplicativeJordan:
    """Test the multiplicative decomposition of diffeomorphisms."""

    def test_unipotent(self):
        """Test that a unipotent jet is its own unipotent factor."""
        F = diffeo("x + x^2", 4)
        F_ss, F_u = multiplicative_jordan(F)
        assert F_ss == JetDiffeo.identity(1, 4)
        assert F_u == F

    def test_linear_diagonal(self):
        """Test that a diagonal linear map is semisimple."""
        F = diffeo("2*x ; 3*y", 3, XY)
        F_ss, F_u = multiplicative_jordan(F)
        assert F_ss == F
        assert F_u == JetDiffeo.identity(2, 3)

    def test_non_resonant(self):
        """Test that 2x + x^2 has no unipotent factor."""
        F = diffeo("2*x + x^2", 4)
        F_ss, F_u = multiplicative_jordan(F)
        assert F_ss == F
        assert F_u == JetDiffeo.identity(1, 4)

    def test_resonant(self):
        """Test (2x, 4y + x^2) = (2x, 4y) o (x, y + x^2/4)."""
        F = diffeo("2*x ; 4*y + x^2", 3, XY)
        F_ss, F_u = multiplicative_jordan(F)
        assert F_ss == diffeo("2*x ; 4*y", 3, XY)
        assert F_u == diffeo("x ; y + x^2/4", 3, XY)
        assert has_unipotent_linear_part(F_u)
        assert diffeo_compose(F_ss, F_u) == diffeo_compose(F_u, F_ss) == F
