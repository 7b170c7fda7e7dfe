"""
Command implementations. Each takes parsed objects and returns a Report,
so flags on the command line and problem files share one code path.
"""

from __future__ import annotations

import math

from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import mpmath

from jetflow.config import DEFAULTS, JetflowConfig
from jetflow.embed import branch_necessity, embed_power_in_flow
from jetflow.errors import DomainError, VerificationError
from jetflow.experiments import (
    commutator_demo,
    distinct_jets,
    ptx_coefficients,
    ptx_demo,
)
from jetflow.expoly import (
    ExpPolyMatrix,
    evaluate_matrix_int,
    evaluate_matrix_num,
    flow_operator,
    operator_rows,
    power_operator,
)
from jetflow.intersect import (
    IdealGens,
    colength_oracle,
    ideal_sum,
    index_sequence,
    mu_sequence,
    multiplicity,
)
from jetflow.jets import (
    FiniteGroupAction,
    JetDiffeo,
    JetVectorField,
    bochner_average,
    format_components,
    jet_determination,
)
from jetflow.numeric import GaussianRational, format_gaussian, torsion_order
from jetflow.numeric.linalg import format_matrix
from jetflow.problem import load_problem
from jetflow.report import Report
from jetflow.utils import get_logger

logger = get_logger(__name__)


def resolve_cap(cap: int | None, order: int, config: JetflowConfig = DEFAULTS) -> int:
    """Explicit cap, else the configured default clipped to the jet order."""
    if cap is None:
        return min(config.default_cap, order)
    if cap > order:
        raise DomainError(f"cap {cap} exceeds the jet order {order}")
    return cap


def _tag(result) -> str:
    return "exact" if result.is_finite else "exceeded"


def run_multiplicity(
    V: IdealGens,
    W: IdealGens,
    cap: int | None = None,
    check: bool = False,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    cap = resolve_cap(cap, V.order, config)
    result = multiplicity(V, W, cap)
    report = Report(title="Intersection multiplicity", header=["item", "value", "tag"])
    report.add_row("multiplicity", result, _tag(result))
    if check:
        oracle = colength_oracle(ideal_sum(V, W), cap)
        report.add_row("oracle", oracle, _tag(oracle))
        if (oracle.is_finite, oracle.value) != (result.is_finite, result.value):
            raise VerificationError(
                f"stabilization scan gives {result}, quotient dimension {oracle}"
            )
    if result.is_finite:
        report.notes.append(str(result))
    else:
        report.warnings.append(f"no certificate up to cap {cap}")
    return report


def _sequence_report(
    title: str, column: str, sequence: list[tuple[int, Any]]
) -> Report:
    report = Report(title=title, header=["k", column, "tag"])
    for k, result in sequence:
        report.add_row(k, result, _tag(result))
    finite = [result.value for _, result in sequence if result.is_finite]
    if len(finite) == len(sequence):
        report.notes.append(f"all finite, bounded by {max(finite)}")
    else:
        missing = [k for k, result in sequence if not result.is_finite]
        report.warnings.append(f"exceeded cap at k = {', '.join(map(str, missing))}")
    return report


def run_mu_seq(
    F: JetDiffeo,
    V: IdealGens,
    W: IdealGens,
    kmax: int,
    cap: int | None = None,
    parallel: bool = False,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    cap = resolve_cap(cap, F.order, config)
    sequence = mu_sequence(
        F, V, W, kmax, cap, parallel=parallel, workers=config.parallel_workers
    )
    return _sequence_report("Multiplicities of pulled back germs", "mu", sequence)


def run_index_seq(
    F: JetDiffeo,
    kmax: int,
    cap: int | None = None,
    parallel: bool = False,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    cap = resolve_cap(cap, F.order, config)
    sequence = index_sequence(
        F, kmax, cap, parallel=parallel, workers=config.parallel_workers
    )
    return _sequence_report("Fixed point indices of iterates", "index", sequence)


def run_commutator_demo(
    g1: JetDiffeo,
    g2: JetDiffeo,
    depth: int,
    cap: int | None = None,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    cap = resolve_cap(cap, g1.order, config)
    report = Report(
        title="Iterated commutators", header=["depth", "nu", "index", "tag"]
    )
    for step in commutator_demo(g1, g2, depth, cap):
        nu = "inf" if step.nu is None else step.nu
        report.add_row(step.depth, nu, step.index, _tag(step.index))
    return report


def run_ptx_demo(
    prime: int, order: int | None = None, config: JetflowConfig = DEFAULTS
) -> Report:
    order = prime if order is None else order
    result = ptx_demo(prime, order, config.ptx_tolerance)
    t = math.factorial(prime - 1)

    report = Report(
        title=f"Coefficients of P_t at t = {t}",
        header=["j", "divides_t", "abs_2sin", "tag"],
    )
    for c in ptx_coefficients(t, order, config.ptx_tolerance, config.numeric_dps):
        report.add_row(c.j, "yes" if c.vanishes else "no", f"{c.magnitude:.15g}", "numeric")
    report.notes.append(f"order-of-zero {result} at t = {t}")
    return report


def _matrix_report(
    title: str, M: ExpPolyMatrix, names: Sequence[str] | None
) -> Report:
    report = Report(title=title, header=["row", *M.labels(names), "tag"])
    for row in operator_rows(M, names):
        report.add_row(*row, "exact")
    return report


def run_flow(
    X: JetVectorField,
    t: Fraction | None = None,
    names: Sequence[str] | None = None,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    M = flow_operator(X)
    if t is None:
        report = _matrix_report("Flow operator e^(tA)", M, names)
    else:
        report = Report(
            title=f"Flow operator at t = {t}",
            header=["row", *M.labels(names), "tag"],
        )
        values = evaluate_matrix_num(M, t, config.numeric_dps)
        for i, label in enumerate(M.labels(names)):
            entries = [
                mpmath.nstr(values[i, j], 15) for j in range(values.cols)
            ]
            report.add_row(label, *entries, "numeric")
    report.notes.append(f"t-degree {M.t_degree()}")
    return report


def run_power(
    F: JetDiffeo,
    t: int | None = None,
    names: Sequence[str] | None = None,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    M = power_operator(F)
    if t is None:
        report = _matrix_report("Power operator A^t", M, names)
    else:
        report = Report(
            title=f"Power operator at t = {t}",
            header=["row", *M.labels(names), "tag"],
        )
        for label, row in zip(M.labels(names), format_matrix(evaluate_matrix_int(M, t))):
            report.add_row(label, *row, "exact")
    report.notes.append(f"t-degree {M.t_degree()}")
    return report


def run_linearize(
    K: FiniteGroupAction,
    names: Sequence[str] | None = None,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    U = bochner_average(K)
    report = Report(title="Bochner linearization", header=["item", "index", "value", "tag"])
    report.add_row("order", "", len(K), "exact")
    for i, component in enumerate(U.components):
        report.add_row("U", i + 1, format_components([component], names), "exact")
    report.notes.append(f"U o h = dh o U for all {len(K)} elements")
    return report


def run_torsion(
    lambdas: Sequence[GaussianRational], config: JetflowConfig = DEFAULTS
) -> Report:
    k = torsion_order(list(lambdas))
    report = Report(title="Roots of unity in the eigenvalue group", header=["item", "value", "tag"])
    for value in lambdas:
        report.add_row("lambda", format_gaussian(value), "exact")
    report.add_row("k", k, "exact")
    report.notes.append(f"k={k}")
    return report


def run_embed(
    F: JetDiffeo,
    necessity: int | None = None,
    names: Sequence[str] | None = None,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    result = embed_power_in_flow(
        F,
        dps=config.numeric_dps,
        tolerance=config.acceptance_tolerance,
        with_family=False,
    )
    report = result.report(names)
    if necessity is not None:
        if not 1 <= necessity < result.k:
            raise DomainError(f"necessity check needs 1 <= k' < {result.k}")
        defect = branch_necessity(
            F, necessity, config.branch_search_radius, config.numeric_dps
        )
        report.add_row("necessity", necessity, f"{defect:.15g}", "numeric")
        if defect <= config.acceptance_tolerance:
            report.warnings.append(f"k' = {necessity} admits a generating field")
        else:
            report.notes.append(f"no generating field for k' = {necessity}")
    return report


def run_jet_determination(
    K: FiniteGroupAction, config: JetflowConfig = DEFAULTS
) -> Report:
    p = jet_determination(K)
    report = Report(title="Jet determination", header=["q", "distinct", "tag"])
    for q, count in distinct_jets(K):
        report.add_row(q, count, "exact")
    report.notes.append(f"p={p}")
    return report


def run_command(
    name: str,
    arguments: dict[str, Any],
    names: Sequence[str] | None = None,
    config: JetflowConfig = DEFAULTS,
) -> Report:
    """Dispatches a command by its CLI name."""
    logger.debug("running %s with %s", name, sorted(arguments))
    if name == "multiplicity":
        return run_multiplicity(config=config, **arguments)
    if name == "mu-seq":
        return run_mu_seq(config=config, **arguments)
    if name == "index-seq":
        return run_index_seq(config=config, **arguments)
    if name == "commutator-demo":
        return run_commutator_demo(config=config, **arguments)
    if name == "ptx-demo":
        return run_ptx_demo(config=config, **arguments)
    if name == "flow":
        return run_flow(names=names, config=config, **arguments)
    if name == "power":
        return run_power(names=names, config=config, **arguments)
    if name == "linearize":
        return run_linearize(names=names, config=config, **arguments)
    if name == "torsion":
        return run_torsion(config=config, **arguments)
    if name == "embed":
        return run_embed(names=names, config=config, **arguments)
    if name == "jet-determination":
        return run_jet_determination(config=config, **arguments)
    raise DomainError(f"unknown command `{name}`")


def run_problem(path: Path, config: JetflowConfig = DEFAULTS) -> Report:
    problem = load_problem(path)
    return run_command(
        problem.command.name, problem.arguments, problem.names, config
    )
