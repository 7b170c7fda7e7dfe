"""
Embedding a power of a formal diffeomorphism into a formal flow.

F = F_ss o F_u. The unipotent part gives V_n = log(F_u^k) exactly. The
semisimple part acts on the weight space of x^alpha by lambda^alpha and is
generated by V_s with weight k * sum alpha_i (theta_i + delta_i tau), where
the branch corrections delta in (1/k)Z^n make the weight constant on every
resonance class. Then e^(V_s + V_n) = F^k.
"""

from __future__ import annotations

import itertools

from fractions import Fraction
from typing import Sequence

import mpmath

from pydantic import BaseModel, ConfigDict
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp
from sympy.polys.rings import PolyElement

from jetflow.config import DEFAULTS
from jetflow.errors import DomainError, VerificationError
from jetflow.expoly import ExpPolyMatrix, power_operator
from jetflow.expoly.power import spectral_projectors
from jetflow.jets import (
    JetDiffeo,
    JetOperator,
    JetVectorField,
    Spectrum,
    as_operator,
    diffeo_power,
    diffeo_truncate,
    exp_vf,
    is_derivation_operator,
    linear_part,
    log_unipotent,
    multiplicative_jordan,
    operator_jordan,
    spectrum,
    vf_as_operator,
)
from jetflow.jets.diffeo import has_unipotent_linear_part, require_lower_triangular
from jetflow.jets.text import format_components
from jetflow.numeric.gaussian import GaussianRational, format_gaussian, to_mpc
from jetflow.numeric.lattice import relation_lattice, torsion_order
from jetflow.numeric.linalg import to_mpmath
from jetflow.report import Report
from jetflow.series import degree, monomial_index, monomial_label, monomials
from jetflow.series.multi_index import add
from jetflow.utils import get_logger

from .log_symbols import LogSymbolRing, fraction_element

logger = get_logger(__name__)

Vector = tuple[int, ...]


def roots_of_unity_order(linear_spectrum: Spectrum) -> int:
    """Size k of the group of roots of unity generated by the eigenvalues."""
    return torsion_order(list(linear_spectrum.eigenvalues))


class BranchData(BaseModel):
    """
    Relation lattice basis e_j of the eigenvalues, the windings r(e_j) with
    sum_i e_ji Log lambda_i = 2 pi i r(e_j), and corrections delta solving
    sum_i e_ji delta_i = -r(e_j).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int
    eigenvalues: tuple[GaussianRational, ...]
    relations: tuple[Vector, ...] = ()
    windings: tuple[int, ...] = ()
    delta: tuple[Fraction, ...] = ()


def _winding(e: Vector, lambdas: Sequence[GaussianRational], dps: int, tolerance: float) -> int:
    with mpmath.workdps(dps):
        values = [to_mpc(value) for value in lambdas]
        modulus = sum(a * mpmath.log(abs(v)) for a, v in zip(e, values))
        turns = sum(a * mpmath.arg(v) for a, v in zip(e, values)) / (2 * mpmath.pi)
        winding = int(mpmath.nint(turns))
        if abs(modulus) > tolerance or abs(turns - winding) > tolerance:
            raise VerificationError(f"{e} is not a multiplicative relation of the eigenvalues")
        return winding


def _solve_integer(rows: Sequence[Vector], rhs: Sequence[int], n: int) -> list[int]:
    """Integer d with rows . d = rhs, through the Smith decomposition D = S E T."""
    E = DomainMatrix([[ZZ(a) for a in row] for row in rows], (len(rows), n), ZZ)
    smf, s, t = smith_normal_decomp(E)
    diagonal = smf.to_list()
    transformed = [
        sum(int(s_ij) * b for s_ij, b in zip(row, rhs)) for row in s.to_list()
    ]

    y = [0] * n
    for i, value in enumerate(transformed):
        pivot = int(diagonal[i][i]) if i < n else 0
        if pivot == 0:
            if value != 0:
                raise VerificationError("branch correction system is inconsistent")
            continue
        if value % pivot:
            raise VerificationError(
                "branch correction system has no solution with denominator k"
            )
        y[i] = value // pivot

    transform = t.to_list()
    d = [sum(int(transform[i][j]) * y[j] for j in range(n)) for i in range(n)]
    for row, b in zip(rows, rhs):
        if sum(a * x for a, x in zip(row, d)) != b:
            raise VerificationError("branch correction does not solve its system")
    return d


def branch_corrections(
    lambdas: Sequence[GaussianRational],
    k: int | None = None,
    dps: int = DEFAULTS.numeric_dps,
    tolerance: float = DEFAULTS.working_tolerance,
) -> BranchData:
    """
    delta in (1/k)Z^n with sum e_i (Log lambda_i + 2 pi i delta_i) = 0 for
    every relation e; then sum e_i (theta_i + delta_i tau) vanishes in the
    log symbol ring and weights are well defined on resonance classes.
    """
    lambdas = list(lambdas)
    if k is None:
        k = torsion_order(lambdas)
    n = len(lambdas)
    lattice = relation_lattice(lambdas)
    relations = lattice.basis
    windings = tuple(_winding(e, lambdas, dps, tolerance) for e in relations)

    if relations:
        numerators = _solve_integer(relations, [-k * r for r in windings], n)
    else:
        numerators = [0] * n
    delta = tuple(Fraction(d, k) for d in numerators)
    logger.debug(
        "relations %s with windings %s give branch corrections %s",
        relations,
        windings,
        [str(value) for value in delta],
    )
    return BranchData(
        k=k,
        eigenvalues=tuple(lambdas),
        relations=relations,
        windings=windings,
        delta=delta,
    )


def _weight_classes(
    nvars: int, order: int, eigenvalues: Sequence[GaussianRational]
) -> dict[GaussianRational, list[Vector]]:
    """Deglex monomials grouped by their operator eigenvalue lambda^alpha."""
    classes: dict[GaussianRational, list[Vector]] = {}
    for alpha, value in zip(monomials(nvars, order), eigenvalues):
        classes.setdefault(value, []).append(alpha)
    return classes


class SemisimpleField:
    """
    V_s = sum_v s_v C_v over the free log symbols s_v, each C_v an exact
    operator on C_p[[x]] that is a derivation.
    """

    __slots__ = ("nvars", "order", "ring", "parts")

    def __init__(
        self,
        nvars: int,
        order: int,
        ring: LogSymbolRing,
        parts: dict[int, DomainMatrix],
    ):
        self.nvars = nvars
        self.order = order
        self.ring = ring
        self.parts = {v: C for v, C in parts.items() if any(any(row) for row in C.to_list())}

    def is_zero(self) -> bool:
        return not self.parts

    def operator_num(self, dps: int = DEFAULTS.numeric_dps) -> mpmath.matrix:
        size = len(monomials(self.nvars, self.order))
        values = self.ring.values(dps)
        with mpmath.workdps(dps):
            total = mpmath.matrix(size, size)
            for v, C in self.parts.items():
                total += to_mpmath(C) * values[v]
            return total

    def coefficient(self, beta: Vector, i: int) -> PolyElement:
        """Coefficient of x^beta in the i-th component, a linear form in the symbols."""
        index = monomial_index(self.nvars, self.order)
        column = index[tuple(int(j == i) for j in range(self.nvars))]
        element = self.ring.zero
        for v, C in self.parts.items():
            value = C.to_list()[index[beta]][column]
            if value:
                element += self.ring.ring.gens[v] * value
        return element

    def components(self, names: Sequence[str] | None = None) -> list[str]:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        texts = []
        for i in range(self.nvars):
            terms = []
            for beta in monomials(self.nvars, self.order):
                element = self.coefficient(beta, i)
                if element:
                    terms.append(
                        f"({self.ring.format(element)})*{monomial_label(beta, names)}"
                    )
            texts.append(" + ".join(terms) if terms else "0")
        return texts

    def __repr__(self) -> str:
        return f"SemisimpleField({' ; '.join(self.components())!r})"


def semisimple_field(
    F: JetDiffeo,
    S: DomainMatrix,
    eigenvalues: Sequence[GaussianRational],
    branch: BranchData,
) -> SemisimpleField:
    """
    V_s = sum_mu w(mu) P_mu with the spectral projectors P_mu of S and
    w(lambda^alpha) = k * sum alpha_i (theta_i + delta_i tau).
    """
    n, p, k = F.nvars, F.order, branch.k
    ring = LogSymbolRing(branch.eigenvalues, branch.relations, branch.delta)
    theta_plus = [
        ring.theta(i) + ring.tau() * fraction_element(d) for i, d in enumerate(branch.delta)
    ]

    def weight(alpha: Vector) -> PolyElement:
        element = ring.zero
        for a, symbol in zip(alpha, theta_plus):
            if a:
                element += symbol * (k * a)
        return ring.normal_form(element)

    classes = _weight_classes(n, p, eigenvalues)
    weights = {}
    for mu, members in classes.items():
        weights[mu] = weight(members[0])
        if any(weight(alpha) != weights[mu] for alpha in members[1:]):
            raise VerificationError(
                f"weight is not constant on the resonance class of {format_gaussian(mu)}"
            )

    parts: dict[int, DomainMatrix] = {}
    for mu, P in spectral_projectors(S, list(eigenvalues)):
        for v, c in ring.linear_coefficients(weights[mu]).items():
            term = P * c
            parts[v] = parts[v] + term if v in parts else term
    return SemisimpleField(n, p, ring, parts)


class EmbeddingResult(BaseModel):
    """
    V = V_s + V_n with e^V = F^k: V_n exact, V_s over the log symbol ring,
    `residual` the max entry of e^V - F^k on the jet space (0 when exact).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    k: int
    branch: BranchData
    nilpotent: JetVectorField
    semisimple: SemisimpleField
    family: ExpPolyMatrix | None = None
    residual: float = 0.0
    exact: bool = False

    def report(self, names: Sequence[str] | None = None) -> Report:
        report = Report(
            title="Embedding of F^k in a formal flow",
            header=["item", "index", "value", "tag"],
        )
        report.add_row("k", "", self.k, "exact")
        for i, component in enumerate(self.nilpotent.components):
            text = format_components([component], names)
            report.add_row("V_n", i + 1, text, "exact")
        for i, text in enumerate(self.semisimple.components(names)):
            report.add_row("V_s", i + 1, text, "exact")
        for i, d in enumerate(self.branch.delta):
            report.add_row("delta", i + 1, d, "exact")
        report.add_row(
            "residual",
            "",
            "0" if self.exact else f"{self.residual:.15g}",
            "exact" if self.exact else "numeric",
        )
        report.notes.append(f"k={self.k}")
        if self.exact:
            report.notes.append("exp(V) = F verified exactly")
        else:
            report.notes.append(f"|exp(V) - F^{self.k}| = {self.residual:.3g}")
        return report


def _check_field_parts(field: SemisimpleField, N: DomainMatrix) -> None:
    for v, C in field.parts.items():
        name = field.ring.names[v]
        if not is_derivation_operator(JetOperator(field.nvars, field.order, C)):
            raise VerificationError(f"{name} part of V_s is not a derivation")
        if C * N != N * C:
            raise VerificationError(f"{name} part of V_s does not commute with V_n")


def embed_power_in_flow(
    F: JetDiffeo,
    p: int | None = None,
    dps: int = DEFAULTS.numeric_dps,
    tolerance: float = DEFAULTS.acceptance_tolerance,
    with_family: bool = True,
) -> EmbeddingResult:
    """
    V with e^V = F^k for k the torsion order of the spectrum. Unipotent F is
    verified exactly; otherwise e^V is instantiated numerically and compared
    with the jet of F^k.
    """
    if p is not None and p != F.order:
        F = diffeo_truncate(F, p)
    require_lower_triangular(linear_part(F), "diffeomorphism")

    k = roots_of_unity_order(spectrum(F))
    decomposition = operator_jordan(F)
    _, F_u = multiplicative_jordan(F, decomposition)
    V_n = log_unipotent(diffeo_power(F_u, k))

    branch = branch_corrections(list(spectrum(F).eigenvalues), k, dps)
    V_s = semisimple_field(
        F, decomposition.semisimple, decomposition.eigenvalues, branch
    )
    N = vf_as_operator(V_n).matrix
    _check_field_parts(V_s, N)

    if has_unipotent_linear_part(F):
        if not V_s.is_zero() or exp_vf(V_n) != F:
            raise VerificationError("unipotent embedding does not reproduce F")
        residual, exact = 0.0, True
    else:
        target = to_mpmath(as_operator(diffeo_power(F, k)).matrix)
        with mpmath.workdps(dps):
            generator = V_s.operator_num(dps) + to_mpmath(N)
            residual = float(mpmath.mnorm(mpmath.expm(generator) - target, mpmath.inf))
        exact = False
        logger.debug("numeric residual of exp(V) against F^%d: %g", k, residual)
        if residual > tolerance:
            raise VerificationError(
                f"exp(V) differs from F^{k} by {residual:.3g} > {tolerance:g}"
            )

    family = power_operator(diffeo_power(F, k)) if with_family else None
    return EmbeddingResult(
        k=k,
        branch=branch,
        nilpotent=V_n,
        semisimple=V_s,
        family=family,
        residual=residual,
        exact=exact,
    )


def takens_embed(F: JetDiffeo) -> JetVectorField:
    """The exact V with exp_vf(V) = F for a unipotent linear part."""
    if not has_unipotent_linear_part(F):
        raise DomainError("Takens embedding requires a unipotent linear part")
    return log_unipotent(F)


def derivation_defect(C: mpmath.matrix, nvars: int, order: int) -> float:
    """
    max |C(x^alpha) - sum alpha_i x^(alpha - e_i) C(x_i)| for a numeric
    operator on C_p[[x]]; zero exactly for derivations.
    """
    basis = monomials(nvars, order)
    index = monomial_index(nvars, order)
    size = len(basis)
    images = [
        [C[k, index[tuple(int(j == i) for j in range(nvars))]] for k in range(size)]
        for i in range(nvars)
    ]

    defect = mpmath.mpf(0)
    for a, alpha in enumerate(basis):
        expected = [mpmath.mpc(0)] * size
        for i, exponent in enumerate(alpha):
            if not exponent:
                continue
            shift = tuple(e - int(j == i) for j, e in enumerate(alpha))
            for k, beta in enumerate(basis):
                value = images[i][k]
                target = add(beta, shift)
                if value != 0 and degree(target) <= order:
                    expected[index[target]] += exponent * value
        for k in range(size):
            defect = max(defect, abs(C[k, a] - expected[k]))
    return float(defect)


def branch_necessity(
    F: JetDiffeo,
    k_prime: int,
    radius: int = DEFAULTS.branch_search_radius,
    dps: int = DEFAULTS.numeric_dps,
) -> float:
    """
    Smallest max(derivation defect, |e^V' - F^k'|) over candidate fields V'
    built with k' and branch corrections delta' in (1/k')Z^n,
    |k' delta'_i| <= radius * k'.
    """
    if k_prime < 1:
        raise DomainError("k' must be positive")
    require_lower_triangular(linear_part(F), "diffeomorphism")
    n, p = F.nvars, F.order
    lambdas = list(spectrum(F).eigenvalues)

    decomposition = operator_jordan(F)
    _, F_u = multiplicative_jordan(F, decomposition)
    N = to_mpmath(vf_as_operator(log_unipotent(diffeo_power(F_u, k_prime))).matrix)
    target = to_mpmath(as_operator(diffeo_power(F, k_prime)).matrix)
    classes = _weight_classes(n, p, decomposition.eigenvalues)
    projectors = [
        (classes[mu][0], to_mpmath(P))
        for mu, P in spectral_projectors(decomposition.semisimple, decomposition.eigenvalues)
    ]

    best = None
    bound = radius * k_prime
    with mpmath.workdps(dps):
        logs = [mpmath.log(to_mpc(value)) for value in lambdas]
        for numerators in itertools.product(range(-bound, bound + 1), repeat=n):
            shifted = [
                log + 2j * mpmath.pi * mpmath.mpf(d) / k_prime
                for log, d in zip(logs, numerators)
            ]
            C = mpmath.matrix(N.rows, N.cols)
            for alpha, P in projectors:
                w = k_prime * sum(a * s for a, s in zip(alpha, shifted))
                C += P * w
            defect = derivation_defect(C, n, p)
            mismatch = float(mpmath.mnorm(mpmath.expm(C + N) - target, mpmath.inf))
            combined = max(defect, mismatch)
            if best is None or combined < best:
                best = combined
    logger.debug("smallest defect with k' = %d: %g", k_prime, best)
    return best
