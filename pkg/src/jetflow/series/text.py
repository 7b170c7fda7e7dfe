"""
Text format for series: a sum of terms `coef*x^a*y^b` over declared
variable names. Input may also be a rational expression whose divisors
are units, e.g. `x/(1-x)`, which is expanded to the requested order.

The grammar is read by a small recursive descent parser that evaluates
directly into truncated series; only numbers, the declared variables,
`i`, `+ - * / ^ **` and parentheses are accepted.
"""

from __future__ import annotations

import re

from dataclasses import dataclass
from typing import Sequence

from sympy.polys.domains import QQ_I

from jetflow.errors import ParseError
from jetflow.numeric.gaussian import I, format_gaussian

from .multi_index import monomial_label
from .truncated import TruncatedSeries, ts_from_rational, ts_invert_unit, ts_mul

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_RESERVED = {"i", "I"}
_TOKEN = re.compile(
    r"(?P<number>\d+(?:\.\d*)?|\.\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[-+*/^()])"
)
_WHITESPACE = re.compile(r"\s+")
MAX_EXPONENT = 10_000


def parse_variables(text: str | Sequence[str]) -> list[str]:
    """Comma separated identifiers such as `x,y`."""
    parts = text.split(",") if isinstance(text, str) else list(text)
    names = [name.strip() for name in parts]
    offset = 0
    for name in names:
        if not _IDENTIFIER.match(name):
            raise ParseError(f"`{name}` is not a variable name", position=offset)
        if name in _RESERVED:
            raise ParseError(
                f"`{name}` is reserved and cannot be a variable", position=offset
            )
        offset += len(name) + 1
    if len(set(names)) != len(names):
        raise ParseError("variable names must be distinct", position=0)
    return names


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str, names: Sequence[str]) -> list[_Token]:
    tokens = []
    position = 0
    while position < len(text):
        blank = _WHITESPACE.match(text, position)
        if blank:
            position = blank.end()
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError(f"unexpected character `{text[position]}`", position=position)
        kind = match.lastgroup or "op"
        value = match.group()
        if kind == "number" and "." in value:
            raise ParseError("floating point coefficients are not exact", position=position)
        if kind == "name" and value != "i" and value not in names:
            raise ParseError(
                f"unknown variable `{value}`; declared: {', '.join(names)}",
                position=position,
            )
        tokens.append(_Token(kind, value, position))
        position = match.end()
    return tokens


class _SeriesParser:
    """
    expr     := term (("+" | "-") term)*
    term     := factor (("*" | "/") factor)*
    factor   := ("+" | "-") factor | power
    power    := atom [("^" | "**") exponent]
    exponent := ["+" | "-"] integer | "(" exponent ")"
    atom     := integer | name | "(" expr ")"
    """

    def __init__(self, text: str, names: Sequence[str], order: int):
        self.text = text
        self.names = list(names)
        self.nvars = len(names)
        self.order = order
        self.tokens = _tokenize(text, names)
        self.index = 0

    def parse(self) -> TruncatedSeries:
        result = self._expr()
        token = self._peek()
        if token is not None:
            raise ParseError(f"unexpected `{token.text}`", position=token.position)
        return result

    def _peek(self) -> _Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _accept(self, *ops: str) -> _Token | None:
        token = self._peek()
        if token is not None and token.kind == "op" and token.text in ops:
            self.index += 1
            return token
        return None

    def _expect(self, op: str) -> None:
        if self._accept(op) is None:
            token = self._peek()
            position = len(self.text) if token is None else token.position
            raise ParseError(f"expected `{op}`", position=position)

    def _constant(self, value) -> TruncatedSeries:
        return TruncatedSeries.constant(self.nvars, self.order, value)

    def _expr(self) -> TruncatedSeries:
        result = self._term()
        while (token := self._accept("+", "-")) is not None:
            right = self._term()
            result = result + right if token.text == "+" else result - right
        return result

    def _term(self) -> TruncatedSeries:
        result = self._factor()
        while (token := self._accept("*", "/")) is not None:
            right = self._factor()
            if token.text == "*":
                result = ts_mul(result, right)
            else:
                self._check_unit(right, token.position)
                result = ts_from_rational(result, right)
        return result

    def _factor(self) -> TruncatedSeries:
        token = self._accept("+", "-")
        if token is None:
            return self._power()
        operand = self._factor()
        return -operand if token.text == "-" else operand

    def _power(self) -> TruncatedSeries:
        base = self._atom()
        token = self._accept("^", "**")
        if token is None:
            return base
        exponent = self._exponent()
        if abs(exponent) > MAX_EXPONENT:
            raise ParseError(
                f"exponent {exponent} exceeds {MAX_EXPONENT}", position=token.position
            )
        if exponent < 0:
            self._check_unit(base, token.position)
            base = ts_invert_unit(base)
        result = self._constant(1)
        square = base
        n = abs(exponent)
        while n:
            if n & 1:
                result = ts_mul(result, square)
            n >>= 1
            if n:
                square = ts_mul(square, square)
        return result

    def _exponent(self) -> int:
        if self._accept("(") is not None:
            value = self._exponent()
            self._expect(")")
            return value
        sign = self._accept("+", "-")
        token = self._peek()
        if token is None or token.kind != "number":
            position = len(self.text) if token is None else token.position
            raise ParseError("exponent must be an integer", position=position)
        self.index += 1
        value = int(token.text)
        return -value if sign is not None and sign.text == "-" else value

    def _atom(self) -> TruncatedSeries:
        token = self._peek()
        if token is None:
            raise ParseError("unexpected end of input", position=len(self.text))
        if token.kind == "number":
            self.index += 1
            return self._constant(int(token.text))
        if token.kind == "name":
            self.index += 1
            if token.text == "i":
                return self._constant(I)
            return TruncatedSeries.variable(
                self.nvars, self.order, self.names.index(token.text)
            )
        if self._accept("(") is not None:
            inner = self._expr()
            self._expect(")")
            return inner
        raise ParseError(f"unexpected `{token.text}`", position=token.position)

    def _check_unit(self, divisor: TruncatedSeries, position: int) -> None:
        if divisor.constant_term() == QQ_I.zero:
            raise ParseError(
                f"divisor in `{self.text.strip()}` vanishes at the origin",
                position=position,
            )


def parse_series(text: str, names: Sequence[str], order: int) -> TruncatedSeries:
    """
    Parses `text` as a p-jet in the variables `names`.
    """
    if not text.strip():
        raise ParseError("empty series", position=0)
    return _SeriesParser(text, names, order).parse()


def _format_coefficient(c) -> str:
    text = format_gaussian(c, star=True)
    return f"({text})" if c.y else text


def format_series(f: TruncatedSeries, names: Sequence[str] | None = None) -> str:
    """Deglex sum of terms; `0` for the zero jet."""
    if names is None:
        names = [f"x{i + 1}" for i in range(f.nvars)]

    terms = []
    for alpha, c in f.items():
        label = monomial_label(alpha, names)
        coefficient = _format_coefficient(c)
        if label == "1":
            term = coefficient
        elif coefficient == "1":
            term = label
        elif coefficient == "-1":
            term = f"-{label}"
        else:
            term = f"{coefficient}*{label}"
        terms.append(term)

    if not terms:
        return "0"

    text = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            text += f" - {term[1:]}"
        else:
            text += f" + {term}"
    return text
