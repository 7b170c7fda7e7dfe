from __future__ import annotations

from fractions import Fraction

import pytest

from jetflow.errors import GroupError, ParseError
from jetflow.intersect import IdealGens
from jetflow.jets import FiniteGroupAction, JetDiffeo
from jetflow.numeric.gaussian import gaussian
from jetflow.problem import load_problem, parse_problem

from tests.helpers import XY, diffeo, series

MU_SEQ = """
# resonant perturbation
vars x, y
order 8
diffeo F = 2*x ; 4*y - x^2
ideal V = y - x^2 - x^3
ideal W = y
command mu-seq F=F V=V W=W kmax=8 cap=8
"""


class TestParseProblem:
    """Test reading problem files."""

    def test_mu_seq(self):
        """Test that definitions and parameters are resolved."""
        problem = parse_problem(MU_SEQ)
        assert problem.names == XY
        assert problem.order == 8
        assert problem.command.name == "mu-seq"
        assert problem.command.line == 8
        assert problem.arguments["F"] == diffeo("2*x ; 4*y - x^2", 8, XY)
        assert problem.arguments["kmax"] == 8
        assert problem.arguments["cap"] == 8
        assert "parallel" not in problem.arguments
        assert problem.definitions["V"].line == 6

    def test_inline_values(self):
        """Test that values which are not references are parsed in place."""
        problem = parse_problem("vars x, y\norder 4\ncommand multiplicity V=y-x^2 W=y")
        V = problem.arguments["V"]
        assert isinstance(V, IdealGens)
        assert V.gens == (series("y - x^2", 4, XY),)

    def test_series_as_ideal(self):
        """Test that a series definition serves as a principal ideal."""
        text = "vars x\norder 4\nseries P = x^2\ncommand multiplicity V=P W=x"
        assert parse_problem(text).arguments["V"].gens == (series("x^2", 4),)

    def test_literals(self):
        """Test booleans, rationals and eigenvalue lists."""
        problem = parse_problem(
            "vars x\norder 3\nvectorfield X = x^2\ncommand flow X=X t=1/2"
        )
        assert problem.arguments["t"] == Fraction(1, 2)
        problem = parse_problem("vars x\norder 1\ncommand torsion lambdas=2i,2")
        assert problem.arguments["lambdas"] == [gaussian(0, 2), gaussian(2)]
        problem = parse_problem("vars x, y\norder 2\ncommand multiplicity V=x W=y check=yes")
        assert problem.arguments["check"] is True

    def test_group(self):
        """Test that a group line closes its generators."""
        text = "vars x\norder 4\ndiffeo F = -x/(1 + x)\ngroup K = F\ncommand linearize K=K"
        K = parse_problem(text).arguments["K"]
        assert isinstance(K, FiniteGroupAction)
        assert len(K) == 2

    def test_comments_and_blank_lines(self):
        """Test that comments are ignored wherever they appear."""
        text = "# header\n\nvars x  # one variable\norder 2\n\ncommand ptx-demo prime=2\n"
        assert parse_problem(text).arguments == {"prime": 2}

    def test_identity_diffeo(self):
        """Test a definition over several variables."""
        text = "vars x, y\norder 3\ndiffeo F = x ; y\ncommand index-seq F=F kmax=1"
        assert parse_problem(text).arguments["F"] == JetDiffeo.identity(2, 3)


class TestParseErrors:
    """Test that malformed problem files name the offending line."""

    def _error(self, text: str) -> ParseError:
        with pytest.raises(ParseError) as info:
            parse_problem(text)
        return info.value

    def test_missing_vars(self):
        """Test that `vars` is required."""
        assert "vars" in self._error("order 2\ncommand ptx-demo prime=2").message

    def test_missing_command(self):
        """Test that a command is required."""
        assert "command" in self._error("vars x\norder 2").message

    def test_duplicate_order(self):
        """Test that `order` appears once."""
        assert self._error("vars x\norder 2\norder 3\ncommand ptx-demo prime=2").line == 3

    def test_unknown_keyword(self):
        """Test that unknown keywords are rejected with their line."""
        error = self._error("vars x\norder 2\nmatrix M = 1\ncommand ptx-demo prime=2")
        assert error.line == 3
        assert "matrix" in error.message

    def test_duplicate_name(self):
        """Test that names are defined once."""
        text = "vars x\norder 2\nseries P = x\nseries P = x^2\ncommand ptx-demo prime=2"
        assert self._error(text).line == 4

    def test_dangling_reference(self):
        """Test that an undefined name in a command is reported."""
        error = self._error("vars x\norder 2\ncommand index-seq F=G kmax=2")
        assert error.line == 3
        assert "G" in error.message

    def test_kind_mismatch(self):
        """Test that a parameter must receive the right kind of definition."""
        text = "vars x\norder 2\nideal V = x^2\ncommand index-seq F=V kmax=2"
        assert "diffeo" in self._error(text).message

    def test_unknown_command(self):
        """Test that unknown commands are listed."""
        assert "unknown command" in self._error("vars x\norder 2\ncommand solve").message

    def test_unknown_parameter(self):
        """Test that parameters are checked against the command."""
        assert "no parameter" in self._error("vars x\norder 2\ncommand ptx-demo p=2").message

    def test_missing_parameter(self):
        """Test that required parameters must be present."""
        assert "prime" in self._error("vars x\norder 2\ncommand ptx-demo").message

    def test_bad_literal(self):
        """Test that an integer parameter rejects other text."""
        error = self._error("vars x\norder 2\ncommand ptx-demo prime=five")
        assert error.line == 3

    def test_series_error_position(self):
        """Test that a series error carries the line of its definition."""
        error = self._error("vars x\norder 2\nseries P = x + z\ncommand ptx-demo prime=2")
        assert error.line == 3
        assert str(error).startswith("line 3")

    def test_group_reference(self):
        """Test that group elements must be diffeo definitions."""
        text = "vars x\norder 2\nseries P = x\ngroup K = P\ncommand linearize K=K"
        assert self._error(text).line == 4

    def test_group_not_finite(self):
        """Test that an infinite order generator is a group error."""
        text = "vars x\norder 2\ndiffeo F = 2*x\ngroup K = F\ncommand linearize K=K"
        with pytest.raises(GroupError):
            parse_problem(text)


class TestLoadProblem:
    """Test reading problem files from disk."""

    def test_load(self, tmp_path):
        """Test that a file on disk is parsed."""
        path = tmp_path / "problem.jet"
        path.write_text(MU_SEQ)
        assert load_problem(path).command.name == "mu-seq"

    def test_missing(self, tmp_path):
        """Test that a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_problem(tmp_path / "missing.jet")
