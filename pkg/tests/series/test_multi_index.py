from __future__ import annotations

from jetflow.series.multi_index import (
    dimension,
    monomial_index,
    monomial_label,
    monomials,
)


class TestMonomials:
    """Test the deglex monomial basis."""

    def test_two_variables(self):
        """Test deglex order in two variables up to degree two."""
        assert monomials(2, 2) == (
            (0, 0),
            (1, 0),
            (0, 1),
            (2, 0),
            (1, 1),
            (0, 2),
        )

    def test_one_variable(self):
        """Test that one variable gives 1, x, x^2, ..."""
        assert monomials(1, 3) == ((0,), (1,), (2,), (3,))

    def test_dimension(self):
        """Test that the basis size is C(n+p, n)."""
        for n, p in [(1, 4), (2, 16), (3, 5)]:
            assert len(monomials(n, p)) == dimension(n, p)
        assert dimension(2, 16) == 153

    def test_index(self):
        """Test that the index map inverts the basis enumeration."""
        index = monomial_index(3, 3)
        for rank, alpha in enumerate(monomials(3, 3)):
            assert index[alpha] == rank


class TestMonomialLabel:
    """Test monomial labels."""

    def test_labels(self):
        """Test text labels of monomials."""
        names = ["x", "y"]
        assert monomial_label((0, 0), names) == "1"
        assert monomial_label((1, 0), names) == "x"
        assert monomial_label((2, 1), names) == "x^2*y"
