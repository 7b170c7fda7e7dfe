"""
How many distinct q-jets a finite group action has at each order q.
"""

from __future__ import annotations

from jetflow.jets import FiniteGroupAction
from jetflow.series import ts_truncate


def distinct_jets(K: FiniteGroupAction) -> list[tuple[int, int]]:
    """(q, number of distinct q-jets) for q = 0..p."""
    counts = []
    for q in range(K.order + 1):
        jets = {
            tuple(ts_truncate(component, q) for component in g.components)
            for g in K.elements
        }
        counts.append((q, len(jets)))
    return counts
