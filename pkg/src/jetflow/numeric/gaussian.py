"""
Exact elements of Q(i).

Values are sympy's `QQ_I` domain elements; this module adds the
"a/b+c/di" text format and the (num_re, num_im, den) normal form.
"""

import math
import re

from fractions import Fraction
from typing import Any

import mpmath

from sympy import Expr, expand
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational
from sympy.polys.polyerrors import CoercionFailed

from jetflow.errors import DomainError, ParseError

__all__ = [
    "GaussianRational",
    "ONE",
    "ZERO",
    "I",
    "gaussian",
    "gaussian_from_sympy",
    "gaussian_parts",
    "format_gaussian",
    "parse_gaussian",
    "to_mpc",
]

_NUMBER = r"\d+(?:/\d+)?"
_REAL = re.compile(rf"^(?P<re>[+-]?{_NUMBER})$")
_IMAGINARY = re.compile(rf"^(?P<sign>[+-])?(?P<im>{_NUMBER})?\*?i$")
_COMPLEX = re.compile(rf"^(?P<re>[+-]?{_NUMBER})(?P<sign>[+-])(?P<im>{_NUMBER})?\*?i$")

ZERO: GaussianRational = QQ_I.zero
ONE: GaussianRational = QQ_I.one
I: GaussianRational = GaussianRational(QQ(0), QQ(1))


def _rational(value: Any):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, tuple):
        return QQ(*value)
    return QQ.convert(value)


def gaussian(real: Any = 0, imag: Any = 0) -> GaussianRational:
    """
    Builds re + im*i from ints, Fractions, (num, den) tuples or QQ elements.
    """
    return GaussianRational(_rational(real), _rational(imag))


def gaussian_from_sympy(expr: Expr | int) -> GaussianRational:
    try:
        if isinstance(expr, Expr):
            return QQ_I.from_sympy(expand(expr))
        return QQ_I.convert(expr)
    except CoercionFailed as e:
        raise DomainError(f"`{expr}` is not an element of Q(i)") from e


def gaussian_parts(z: GaussianRational) -> tuple[int, int, int]:
    """
    Normal form (num_re, num_im, den) with den > 0 and
    gcd(num_re, num_im, den) = 1.
    """
    den_re = int(z.x.denominator)
    den_im = int(z.y.denominator)
    den = den_re * den_im // math.gcd(den_re, den_im)
    num_re = int(z.x.numerator) * (den // den_re)
    num_im = int(z.y.numerator) * (den // den_im)
    return num_re, num_im, den


def _format_rational(q) -> str:
    numerator, denominator = int(q.numerator), int(q.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def format_gaussian(
    z: GaussianRational, star: bool = False, explicit_unit: bool = False
) -> str:
    """
    Prints "3/5+4/5i", "-1", "i", "2i". With `star` the imaginary unit is
    written as a factor ("4/5*i") so that the result is valid series text;
    with `explicit_unit` a unit imaginary part keeps its coefficient ("1+1i").
    """
    real, imag = z.x, z.y
    if not imag:
        return _format_rational(real)

    if imag == QQ(1) and not explicit_unit:
        imag_text = "i"
    elif imag == QQ(-1) and not explicit_unit:
        imag_text = "-i"
    else:
        imag_text = f"{_format_rational(imag)}{'*' if star else ''}i"

    if not real:
        return imag_text

    sign = "+" if imag > 0 else ""
    return f"{_format_rational(real)}{sign}{imag_text}"


def _parse_number(text: str | None, default: int = 1):
    if text is None or text == "":
        return QQ(default)
    if "/" in text:
        numerator, denominator = text.split("/")
        if int(denominator) == 0:
            raise ZeroDivisionError
        return QQ(int(numerator), int(denominator))
    return QQ(int(text))


def parse_gaussian(text: str) -> GaussianRational:
    """
    Parses the "a/b+c/di" format; every part is optional ("-1", "i", "2i").
    """
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty Gaussian rational", position=0)

    try:
        if match := _REAL.match(compact):
            return GaussianRational(_parse_number(match["re"]), QQ(0))

        if match := _IMAGINARY.match(compact):
            imag = _parse_number(match["im"])
            if match["sign"] == "-":
                imag = -imag
            return GaussianRational(QQ(0), imag)

        if match := _COMPLEX.match(compact):
            imag = _parse_number(match["im"])
            if match["sign"] == "-":
                imag = -imag
            return GaussianRational(_parse_number(match["re"]), imag)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in `{text}`", position=text.find("/0"))

    position = next(
        (index for index, char in enumerate(text) if char not in "0123456789/+-*i "),
        0,
    )
    raise ParseError(f"`{text}` is not of the form a/b+c/di", position=position)


def to_mpc(z: GaussianRational) -> mpmath.mpc:
    """Numeric value at the current mpmath working precision."""
    real = mpmath.mpf(int(z.x.numerator)) / int(z.x.denominator)
    imag = mpmath.mpf(int(z.y.numerator)) / int(z.y.denominator)
    return mpmath.mpc(real, imag)
