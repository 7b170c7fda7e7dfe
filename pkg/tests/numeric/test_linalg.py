from __future__ import annotations

import pytest

from jetflow.errors import DomainError
from jetflow.numeric.gaussian import I, gaussian, gaussian_parts
from jetflow.numeric.linalg import (
    identity,
    is_lower_triangular,
    is_nilpotent,
    matrix,
    matrix_poly,
    rank,
    split_eigenvalues,
)


def _sorted(values):
    return sorted(values, key=gaussian_parts)


class TestSplitEigenvalues:
    """Test exact eigenvalues over Q(i)."""

    def test_triangular(self):
        """Test eigenvalues of an upper triangular matrix."""
        assert _sorted(split_eigenvalues(matrix([[2, 1], [0, 3]]))) == [
            gaussian(2),
            gaussian(3),
        ]

    def test_repeated(self):
        """Test that multiplicities are kept."""
        assert split_eigenvalues(matrix([[1, 1], [0, 1]])) == [gaussian(1)] * 2

    def test_rotation(self):
        """Test that a quarter rotation has eigenvalues +-i."""
        assert _sorted(split_eigenvalues(matrix([[0, -1], [1, 0]]))) == _sorted(
            [I, -I]
        )

    def test_not_split(self):
        """Test that x^2 + 2 is rejected."""
        with pytest.raises(DomainError):
            split_eigenvalues(matrix([[0, -2], [1, 0]]))


class TestMatrixHelpers:
    """Test small matrix helpers."""

    def test_nilpotent(self):
        """Test nilpotence detection."""
        assert is_nilpotent(matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
        assert not is_nilpotent(matrix([[1, 0], [0, 0]]))

    def test_lower_triangular(self):
        """Test lower triangularity."""
        assert is_lower_triangular(matrix([[1, 0], [5, 2]]))
        assert not is_lower_triangular(matrix([[1, 5], [0, 2]]))

    def test_rank(self):
        """Test exact rank."""
        assert rank(matrix([[1, 2], [2, 4]])) == 1
        assert rank(identity(3)) == 3

    def test_matrix_poly(self):
        """Test Horner evaluation of S^2 - 3S + 2."""
        S = matrix([[1, 0], [0, 2]])
        result = matrix_poly([gaussian(1), gaussian(-3), gaussian(2)], S)
        assert result == matrix([[0, 0], [0, 0]])
