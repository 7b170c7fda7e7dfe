from __future__ import annotations

import pytest

from jetflow.errors import (
    DomainError,
    GroupError,
    JetflowError,
    ParseError,
    UnsupportedError,
    VerificationError,
)


class TestErrorCodes:
    """Test the stable error codes shared with tool responses."""

    @pytest.mark.parametrize(
        "error, code",
        [
            (DomainError("m"), "DOMAIN_ERROR"),
            (UnsupportedError("m"), "UNSUPPORTED"),
            (GroupError("m"), "NOT_A_GROUP"),
            (ParseError("m"), "PARSE_ERROR"),
            (VerificationError("m"), "VERIFICATION_FAILED"),
        ],
    )
    def test_codes(self, error, code):
        assert error.code == code
        assert isinstance(error, JetflowError)

    def test_code_override(self):
        assert JetflowError("m", code="CUSTOM").code == "CUSTOM"

    def test_builtin_bases(self):
        assert isinstance(DomainError("m"), ValueError)
        assert isinstance(VerificationError("m"), ArithmeticError)
        assert isinstance(UnsupportedError("m"), DomainError)


class TestParseError:
    """Test the location prefix of parse errors."""

    def test_plain(self):
        assert str(ParseError("bad")) == "bad"

    def test_position_is_one_based(self):
        assert str(ParseError("bad", position=0)) == "column 1: bad"

    def test_line_and_position(self):
        assert str(ParseError("bad", position=2, line=5)) == "line 5, column 3: bad"
