"""
Iterated commutators [g1, [g1, ..., [g1, g2]]] and the growth of their
contact with the identity.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from jetflow.errors import DomainError
from jetflow.intersect import MultResult, fixed_point_index
from jetflow.jets import JetDiffeo, diffeo_nu, group_commutator
from jetflow.series import INFINITE
from jetflow.utils import get_logger

logger = get_logger(__name__)


class CommutatorStep(BaseModel):
    """nu is None when the commutator is the identity jet."""

    model_config = ConfigDict(frozen=True)

    depth: int
    nu: int | None
    index: MultResult


def iterated_commutators(g1: JetDiffeo, g2: JetDiffeo, depth: int) -> list[JetDiffeo]:
    if depth < 1:
        raise DomainError("depth must be at least 1")
    current = g2
    commutators = []
    for _ in range(depth):
        current = group_commutator(g1, current)
        commutators.append(current)
    return commutators


def commutator_demo(
    g1: JetDiffeo, g2: JetDiffeo, depth: int, cap: int | None = None
) -> list[CommutatorStep]:
    steps = []
    for level, commutator in enumerate(iterated_commutators(g1, g2, depth), start=1):
        nu = diffeo_nu(commutator)
        index = fixed_point_index(commutator, 1, cap)
        logger.debug("commutator of depth %d: nu = %s, index %s", level, nu, index)
        steps.append(
            CommutatorStep(
                depth=level,
                nu=None if nu == INFINITE else nu,
                index=index,
            )
        )
    return steps
