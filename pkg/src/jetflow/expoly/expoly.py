"""
Exponential polynomials sum c * chi(t) * t^k in one time variable t.

Characters come in two kinds that never mix: `mult` characters lambda^t of
discrete orbits, exactly evaluable at integers, and `exp` characters
e^(mu t) of flows, evaluated numerically.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping

import mpmath

from pydantic import BaseModel, ConfigDict
from sympy.polys.domains import QQ_I

from jetflow.errors import DomainError
from jetflow.numeric.factorization import gaussian_pow
from jetflow.numeric.gaussian import (
    GaussianRational,
    format_gaussian,
    to_mpc,
)

Key = tuple[GaussianRational, int]


class CharacterKind(str, Enum):
    MULT = "mult"
    EXP = "exp"


def _wrap(text: str) -> str:
    return text if text.isdigit() else f"({text})"


class Character(BaseModel):
    """
    lambda^t (kind `mult`, value = base) or e^(mu t) (kind `exp`,
    value = frequency).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: CharacterKind
    value: GaussianRational

    @classmethod
    def trivial(cls, kind: CharacterKind | str) -> Character:
        kind = CharacterKind(kind)
        return cls(kind=kind, value=QQ_I.one if kind == CharacterKind.MULT else QQ_I.zero)

    def is_trivial(self) -> bool:
        return self == Character.trivial(self.kind)

    def __mul__(self, other: Character) -> Character:
        if self.kind != other.kind:
            raise DomainError("cannot multiply characters of different kinds")
        if self.kind == CharacterKind.MULT:
            return Character(kind=self.kind, value=self.value * other.value)
        return Character(kind=self.kind, value=self.value + other.value)

    def __str__(self) -> str:
        if self.kind == CharacterKind.MULT:
            return f"{_wrap(format_gaussian(self.value))}^t"
        return f"exp({_wrap(format_gaussian(self.value, explicit_unit=True))}t)"


class ExpPoly:
    """
    Finite sum of c * chi^t * t^k, stored as {(chi value, k): c} without
    zero coefficients; equal characters are merged on construction.
    """

    __slots__ = ("kind", "terms", "_hash")

    def __init__(
        self,
        kind: CharacterKind | str,
        terms: Mapping[Key, GaussianRational] | None = None,
    ):
        self.kind = CharacterKind(kind)
        merged: dict[Key, GaussianRational] = {}
        for (value, k), c in (terms or {}).items():
            if k < 0:
                raise DomainError("powers of t must be nonnegative")
            if self.kind == CharacterKind.MULT and not value:
                raise DomainError("the base of a multiplicative character is zero")
            key = (QQ_I.convert(value), k)
            merged[key] = merged.get(key, QQ_I.zero) + QQ_I.convert(c)
        self.terms = {key: c for key, c in merged.items() if c}
        self._hash: int | None = None

    @classmethod
    def zero(cls, kind: CharacterKind | str) -> ExpPoly:
        return cls(kind)

    @classmethod
    def constant(cls, kind: CharacterKind | str, c: object) -> ExpPoly:
        return cls(kind, {(Character.trivial(kind).value, 0): c})

    @classmethod
    def term(
        cls,
        character: Character,
        k: int = 0,
        coefficient: object = 1,
    ) -> ExpPoly:
        return cls(character.kind, {(character.value, k): coefficient})

    def items(self) -> Iterator[tuple[Character, int, GaussianRational]]:
        """Terms sorted by character value, then descending power of t."""
        for (value, k), c in sorted(
            self.terms.items(), key=lambda item: (item[0][0].x, item[0][0].y, -item[0][1])
        ):
            yield Character(kind=self.kind, value=value), k, c

    def frequencies(self) -> list[GaussianRational]:
        """Distinct character values occurring with a nonzero coefficient."""
        seen = []
        for character, _, _ in self.items():
            if character.value not in seen:
                seen.append(character.value)
        return seen

    def characters(self) -> list[Character]:
        return [Character(kind=self.kind, value=v) for v in self.frequencies()]

    def t_degree(self) -> int:
        """Highest power of t; 0 for the zero polynomial."""
        return max((k for _, k in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.kind == other.kind and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.kind, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: ExpPoly) -> ExpPoly:
        return ep_add(self, other)

    def __sub__(self, other: ExpPoly) -> ExpPoly:
        return ep_sub(self, other)

    def __neg__(self) -> ExpPoly:
        return ep_neg(self)

    def __mul__(self, other: ExpPoly) -> ExpPoly:
        return ep_mul(self, other)

    def __str__(self) -> str:
        return format_exppoly(self)

    def __repr__(self) -> str:
        return f"ExpPoly({self.kind.value}, {format_exppoly(self)!r})"


def _check_kinds(a: ExpPoly, b: ExpPoly) -> None:
    if a.kind != b.kind:
        raise DomainError(
            f"cannot combine `{a.kind.value}` and `{b.kind.value}` exponential polynomials"
        )


def ep_add(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    _check_kinds(a, b)
    terms = dict(a.terms)
    for key, c in b.terms.items():
        terms[key] = terms.get(key, QQ_I.zero) + c
    return ExpPoly(a.kind, terms)


def ep_neg(a: ExpPoly) -> ExpPoly:
    return ExpPoly(a.kind, {key: -c for key, c in a.terms.items()})


def ep_sub(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    return ep_add(a, ep_neg(b))


def ep_scale(a: ExpPoly, c: object) -> ExpPoly:
    c = QQ_I.convert(c)
    return ExpPoly(a.kind, {key: value * c for key, value in a.terms.items()})


def ep_mul(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    _check_kinds(a, b)
    multiplicative = a.kind == CharacterKind.MULT
    terms: dict[Key, GaussianRational] = {}
    for (u, j), c in a.terms.items():
        for (v, k), d in b.terms.items():
            key = (u * v if multiplicative else u + v, j + k)
            terms[key] = terms.get(key, QQ_I.zero) + c * d
    return ExpPoly(a.kind, terms)


def ep_dt(a: ExpPoly) -> ExpPoly:
    """d/dt (c e^(mu t) t^k) = c mu e^(mu t) t^k + c k e^(mu t) t^(k-1)."""
    if a.kind != CharacterKind.EXP:
        raise DomainError(
            "exact time derivatives exist only for `exp` characters; "
            "d/dt lambda^t involves log(lambda)"
        )
    terms: dict[Key, GaussianRational] = {}
    for (mu, k), c in a.terms.items():
        terms[(mu, k)] = terms.get((mu, k), QQ_I.zero) + c * mu
        if k:
            terms[(mu, k - 1)] = terms.get((mu, k - 1), QQ_I.zero) + c * k
    return ExpPoly(a.kind, terms)


def ep_at_zero(a: ExpPoly) -> GaussianRational:
    """Exact value at t = 0 for either kind."""
    return sum((c for (_, k), c in a.terms.items() if k == 0), QQ_I.zero)


def ep_eval_int(a: ExpPoly, m: int) -> GaussianRational:
    """Exact value sum c lambda^m m^k at an integer m."""
    if a.kind != CharacterKind.MULT:
        raise DomainError("exact integer evaluation needs `mult` characters")
    total = QQ_I.zero
    for (base, k), c in a.terms.items():
        total += c * gaussian_pow(base, m) * QQ_I.convert(m**k)
    return total


def ep_eval_exact(a: ExpPoly, t: int | Fraction) -> GaussianRational:
    """
    Exact value where one exists: `mult` kind at integers, `exp` kind when
    every frequency is zero, i.e. a polynomial in t.
    """
    if a.kind == CharacterKind.MULT:
        if isinstance(t, Fraction) and t.denominator != 1:
            raise DomainError("lambda^t is exact only at integer t")
        return ep_eval_int(a, int(t))

    if any(mu for mu, _ in a.terms):
        raise DomainError("e^(mu t) with mu != 0 has no exact value")
    t = Fraction(t)
    total = QQ_I.zero
    for (_, k), c in a.terms.items():
        power = t**k
        total += c * QQ_I.convert(power.numerator) / QQ_I.convert(power.denominator)
    return total


def to_mpf(t: object) -> mpmath.mpf:
    if isinstance(t, Fraction):
        return mpmath.mpf(t.numerator) / t.denominator
    return mpmath.mpmathify(t)


def ep_eval_num(a: ExpPoly, t: object, dps: int = 30) -> mpmath.mpc:
    """
    Numeric value at t with `dps` working digits; lambda^t uses the
    principal branch.
    """
    with mpmath.workdps(dps):
        t = to_mpf(t)
        total = mpmath.mpc(0)
        for (value, k), c in a.terms.items():
            if a.kind == CharacterKind.MULT:
                character = mpmath.power(to_mpc(value), t)
            else:
                character = mpmath.exp(to_mpc(value) * t)
            total += to_mpc(c) * character * mpmath.power(t, k)
        return +total


def format_exppoly(a: ExpPoly) -> str:
    """
    Prints e.g. "(1/2)*2^t*t^2 + 3^t" or "(2)*exp((1+1i)t)*t"; "0" when empty.
    """
    terms = []
    for character, k, c in a.items():
        factors = []
        if c != QQ_I.one:
            factors.append(f"({format_gaussian(c)})")
        if not character.is_trivial():
            factors.append(str(character))
        if k == 1:
            factors.append("t")
        elif k > 1:
            factors.append(f"t^{k}")
        terms.append("*".join(factors) if factors else "1")
    return " + ".join(terms) if terms else "0"
