class JetflowError(Exception):
    """
    Base class for errors raised by jetflow operations.

    `code` is a stable identifier shared with MCP tool error responses.
    """

    code: str = "JETFLOW_ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code


class DomainError(JetflowError, ValueError):
    """A mathematical precondition of an operation does not hold."""

    code = "DOMAIN_ERROR"


class UnsupportedError(DomainError):
    """The request is outside what can be computed exactly."""

    code = "UNSUPPORTED"


class GroupError(DomainError):
    """Element list does not form a (faithful) finite group at the stored order."""

    code = "NOT_A_GROUP"


class ParseError(JetflowError, ValueError):
    """
    Malformed text input. `position` is a 0-based character offset into the
    offending line, `line` a 1-based line number for problem files.
    """

    code = "PARSE_ERROR"

    def __init__(
        self,
        message: str,
        position: int | None = None,
        line: int | None = None,
    ):
        super().__init__(message)
        self.position = position
        self.line = line

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.position is not None:
            where.append(f"column {self.position + 1}")
        if where:
            return f"{', '.join(where)}: {self.message}"
        return self.message


class VerificationError(JetflowError, ArithmeticError):
    """A postcondition guaranteed by theory failed; indicates a bug."""

    code = "VERIFICATION_FAILED"
