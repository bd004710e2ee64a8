"""Dempster's rule of combination and the classical conflict coefficient."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import MassFunction, SubsetMask, require_same_frame
from .errors import TotalConflictError

__all__ = [
    "TOTAL_CONFLICT_TOL",
    "CombinationResult",
    "conflict_k",
    "combine_dempster",
]

#: Combination is refused when the normalization factor 1 - k is this small.
TOTAL_CONFLICT_TOL = 1e-12


@dataclass(frozen=True)
class CombinationResult:
    """Outcome of one application of Dempster's rule."""

    combined: MassFunction
    k: float


def conflict_k(m1: MassFunction, m2: MassFunction) -> float:
    """Classical conflict: total product mass on disjoint focal pairs."""
    require_same_frame(m1, m2)
    return math.fsum(
        v1 * v2
        for a, v1 in m1.items()
        for b, v2 in m2.items()
        if a & b == 0
    )


def combine_dempster(m1: MassFunction, m2: MassFunction) -> CombinationResult:
    """Combine two BPAs with Dempster's rule.

    Raises :class:`TotalConflictError` when the evidence is totally (or
    numerically indistinguishably from totally) conflicting, i.e. when
    ``1 - k <= TOTAL_CONFLICT_TOL``.
    """
    frame = require_same_frame(m1, m2)
    # Collect every pairwise product per intersection and fsum at the end,
    # which makes the result independent of focal iteration order.
    products: dict[SubsetMask, list[float]] = {}
    conflict: list[float] = []
    for a, v1 in m1.items():
        for b, v2 in m2.items():
            inter = a & b
            if inter == 0:
                conflict.append(v1 * v2)
            else:
                products.setdefault(inter, []).append(v1 * v2)
    k = math.fsum(conflict)
    scale = 1.0 - k
    if scale <= TOTAL_CONFLICT_TOL:
        raise TotalConflictError(k)
    masses = {
        mask: math.fsum(values) / scale for mask, values in products.items()
    }
    return CombinationResult(MassFunction(frame, masses), k)
