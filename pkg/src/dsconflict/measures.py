"""Conflict and similarity measures between basic probability assignments.

The pairwise measures all share one precondition: both BPAs must live on the
same frame.  Everything that only depends on focal elements is evaluated
sparsely (products over focal pairs); the two operations that genuinely range
over the whole power set — the cosine measure :func:`song_cor` and the Gram
matrix check — are capped at moderate frame sizes and vectorized with numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Frame, MassFunction, SubsetMask, require_same_frame
from .errors import (
    BadThresholdError,
    BothEmptyError,
    FrameTooLargeForCheckError,
    FrameTooLargeForMeasureError,
    InternalConsistencyError,
)
from .fusion import conflict_k

__all__ = [
    "CLAMP_TOL",
    "SONG_COR_MAX_FRAME",
    "GRAM_MAX_FRAME",
    "GRAM_PIVOT_TOL",
    "jaccard",
    "correlation_degree",
    "correlation_coefficient",
    "conflict_kr",
    "jousselme_distance",
    "PignisticDistribution",
    "pignistic",
    "dif_betp",
    "LiuConflict",
    "liu_cf",
    "song_cor",
    "gram_positive_definite",
    "ConflictReport",
    "conflict_report",
]

#: Results may stray outside their exact range by at most this much before
#: clamping turns into an :class:`InternalConsistencyError`.
CLAMP_TOL = 1e-12

#: song_cor enumerates every nonempty subset, so the frame is capped.
SONG_COR_MAX_FRAME = 24

#: gram_positive_definite builds a dense (2^N - 1) square matrix.
GRAM_MAX_FRAME = 12

#: Cholesky pivots must exceed this for a positive-definite verdict.
GRAM_PIVOT_TOL = 1e-12

_SONG_CHUNK = 1 << 16


def _clamp_unit(value: float, what: str) -> float:
    if value < 0.0:
        if value < -CLAMP_TOL:
            raise InternalConsistencyError(f"{what} = {value!r} is below 0")
        return 0.0
    if value > 1.0:
        if value > 1.0 + CLAMP_TOL:
            raise InternalConsistencyError(f"{what} = {value!r} is above 1")
        return 1.0
    return value


def jaccard(a: SubsetMask, b: SubsetMask) -> float:
    """Jaccard index |A & B| / |A | B| of two subset masks.

    Zero if exactly one side is empty; two empty sets have no defined index.
    """
    if a == 0 and b == 0:
        raise BothEmptyError("the Jaccard index of two empty sets is undefined")
    inter = (a & b).bit_count()
    if inter == 0:
        return 0.0
    return inter / (a | b).bit_count()


def _jaccard_focal(a: SubsetMask, b: SubsetMask) -> float:
    # Focal masks are nonempty by the MassFunction invariant.
    inter = (a & b).bit_count()
    if inter == 0:
        return 0.0
    return inter / (a | b).bit_count()


def correlation_degree(m1: MassFunction, m2: MassFunction) -> float:
    """Jaccard-weighted product mass over all focal pairs."""
    require_same_frame(m1, m2)
    return math.fsum(
        v1 * v2 * _jaccard_focal(a, b)
        for a, v1 in m1.items()
        for b, v2 in m2.items()
    )


def correlation_coefficient(m1: MassFunction, m2: MassFunction) -> float:
    """Normalized correlation degree, in [0, 1].

    1 exactly when the BPAs are equal, 0 exactly when every focal element of
    one is disjoint from every focal element of the other.
    """
    c12 = correlation_degree(m1, m2)
    c11 = correlation_degree(m1, m1)
    c22 = correlation_degree(m2, m2)
    if c11 <= 0.0 or c22 <= 0.0:
        raise InternalConsistencyError(
            f"self correlation degrees must be positive, got {c11!r}, {c22!r}"
        )
    return _clamp_unit(c12 / math.sqrt(c11 * c22), "correlation coefficient")


def conflict_kr(m1: MassFunction, m2: MassFunction) -> float:
    """Correlative conflict: 1 - correlation_coefficient."""
    return 1.0 - correlation_coefficient(m1, m2)


def jousselme_distance(m1: MassFunction, m2: MassFunction) -> float:
    """Jousselme distance sqrt((x - y)' D (x - y) / 2) with D the Jaccard matrix.

    Evaluated sparsely over the union of both focal supports; the omitted
    coordinates of x - y are zero and contribute nothing.
    """
    require_same_frame(m1, m2)
    support = sorted(m1.focal.keys() | m2.focal.keys())
    diff = [m1.mass(a) - m2.mass(a) for a in support]
    terms = []
    for i, a in enumerate(support):
        di = diff[i]
        if di == 0.0:
            continue
        for j, b in enumerate(support):
            dj = diff[j]
            if dj != 0.0:
                terms.append(di * dj * _jaccard_focal(a, b))
    quad = math.fsum(terms)
    if quad < 0.0:
        if quad < -CLAMP_TOL:
            raise InternalConsistencyError(
                f"Jousselme quadratic form = {quad!r} is negative"
            )
        quad = 0.0
    return math.sqrt(0.5 * quad)


@dataclass(frozen=True)
class PignisticDistribution:
    """Pignistic probabilities, aligned with ``frame.labels``."""

    frame: Frame
    probabilities: tuple[float, ...]

    def probability(self, label: str) -> float:
        return self.probabilities[self.frame.index(label)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.frame.labels, self.probabilities))


def pignistic(m: MassFunction) -> PignisticDistribution:
    """Pignistic transformation: each focal mass split evenly over its members."""
    shares: list[list[float]] = [[] for _ in range(m.frame.size)]
    for mask, value in m.items():
        share = value / mask.bit_count()
        i = 0
        while mask:
            if mask & 1:
                shares[i].append(share)
            mask >>= 1
            i += 1
    return PignisticDistribution(
        m.frame, tuple(math.fsum(column) for column in shares)
    )


def dif_betp(m1: MassFunction, m2: MassFunction) -> float:
    """Largest pignistic probability difference over all subsets.

    Equal to the sum of the positive singleton differences (the maximizing
    subset collects exactly the singletons where BetP1 exceeds BetP2).
    """
    require_same_frame(m1, m2)
    p1 = pignistic(m1).probabilities
    p2 = pignistic(m2).probabilities
    return math.fsum(d for d in (a - b for a, b in zip(p1, p2)) if d > 0.0)


@dataclass(frozen=True)
class LiuConflict:
    """Liu's two-dimensional conflict verdict <k, difBetP> at threshold epsilon."""

    k: float
    dif_betp: float
    epsilon: float
    in_conflict: bool

    def to_dict(self) -> dict[str, float | bool]:
        return {
            "k": self.k,
            "dif_betp": self.dif_betp,
            "epsilon": self.epsilon,
            "in_conflict": self.in_conflict,
        }


def _check_threshold(epsilon: float) -> float:
    epsilon = float(epsilon)
    if not 0.0 < epsilon < 1.0:
        raise BadThresholdError(
            f"threshold must lie strictly between 0 and 1, got {epsilon!r}"
        )
    return epsilon


def liu_cf(m1: MassFunction, m2: MassFunction, epsilon: float) -> LiuConflict:
    """Liu's conflict model: in conflict iff both k and difBetP exceed epsilon."""
    epsilon = _check_threshold(epsilon)
    require_same_frame(m1, m2)
    k = conflict_k(m1, m2)
    db = dif_betp(m1, m2)
    return LiuConflict(
        k=k,
        dif_betp=db,
        epsilon=epsilon,
        in_conflict=bool(k > epsilon and db > epsilon),
    )


def _song_vector(
    focal: Sequence[tuple[SubsetMask, float]],
    masks: np.ndarray,
    card_b: np.ndarray,
) -> np.ndarray:
    f = np.zeros(masks.shape[0])
    for a, value in focal:
        inter = np.bitwise_count(masks & a).astype(np.float64)
        f += value * inter / (card_b + a.bit_count() - inter)
    return f


def song_cor(m1: MassFunction, m2: MassFunction) -> float:
    """Cosine similarity of Jaccard-modified mass vectors (Song's measure).

    Each BPA is expanded to a vector indexed by every nonempty subset B of the
    frame with entries sum_A m(A) J(A, B), and the result is the cosine of the
    angle between the two expansions.  Exponential in the frame size, hence
    capped at :data:`SONG_COR_MAX_FRAME`.
    """
    frame = require_same_frame(m1, m2)
    n = frame.size
    if n > SONG_COR_MAX_FRAME:
        raise FrameTooLargeForMeasureError(
            f"song_cor ranges over 2^{n} - 1 subsets; "
            f"frame sizes above {SONG_COR_MAX_FRAME} are not supported"
        )
    focal1 = list(m1.items())
    focal2 = list(m2.items())
    s11 = s12 = s22 = 0.0
    total = 1 << n
    for start in range(1, total, _SONG_CHUNK):
        masks = np.arange(start, min(start + _SONG_CHUNK, total), dtype=np.int64)
        card_b = np.bitwise_count(masks).astype(np.float64)
        f1 = _song_vector(focal1, masks, card_b)
        f2 = _song_vector(focal2, masks, card_b)
        s11 += float(f1 @ f1)
        s12 += float(f1 @ f2)
        s22 += float(f2 @ f2)
    if s11 <= 0.0 or s22 <= 0.0:
        raise InternalConsistencyError(
            f"modified mass vectors must have positive norms, got {s11!r}, {s22!r}"
        )
    return _clamp_unit(s12 / math.sqrt(s11 * s22), "song_cor")


def gram_positive_definite(frame: Frame) -> bool:
    """Whether the full Jaccard Gram matrix of the frame is positive definite.

    Builds the dense (2^N - 1) x (2^N - 1) matrix of Jaccard indices over all
    nonempty subsets and runs a Cholesky factorization; every pivot must
    exceed :data:`GRAM_PIVOT_TOL`.
    """
    n = frame.size
    if n > GRAM_MAX_FRAME:
        raise FrameTooLargeForCheckError(
            f"the Gram matrix for frame size {n} has {2 ** n - 1} rows; "
            f"sizes above {GRAM_MAX_FRAME} are not supported"
        )
    masks = np.arange(1, 1 << n, dtype=np.int32)
    inter = np.bitwise_count(masks[:, None] & masks[None, :]).astype(np.float64)
    cards = np.bitwise_count(masks).astype(np.float64)
    gram = inter / (cards[:, None] + cards[None, :] - inter)
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError:
        return False
    pivots = np.diagonal(chol) ** 2
    return bool(np.all(pivots > GRAM_PIVOT_TOL))


@dataclass(frozen=True)
class ConflictReport:
    """All supported measures for one BPA pair.

    ``cor`` is None when the frame is too large for :func:`song_cor`; ``liu``
    is None unless a threshold was supplied.  ``k_r`` is always the exact
    complement of ``r_bpa``.
    """

    k: float
    d_bba: float
    dif_betp: float
    cor: float | None
    r_bpa: float
    k_r: float
    liu: LiuConflict | None

    def to_dict(self) -> dict[str, object]:
        return {
            "k": self.k,
            "d_bba": self.d_bba,
            "dif_betp": self.dif_betp,
            "cor": self.cor,
            "r_bpa": self.r_bpa,
            "k_r": self.k_r,
            "liu": None if self.liu is None else self.liu.to_dict(),
        }


def conflict_report(
    m1: MassFunction,
    m2: MassFunction,
    epsilon: float | None = None,
) -> ConflictReport:
    """Evaluate every applicable measure for one pair of BPAs.

    Liu's model needs a threshold, for which no canonical default exists, so
    it is only included when ``epsilon`` is given.
    """
    frame = require_same_frame(m1, m2)
    k = conflict_k(m1, m2)
    d = jousselme_distance(m1, m2)
    db = dif_betp(m1, m2)
    r = correlation_coefficient(m1, m2)
    cor = song_cor(m1, m2) if frame.size <= SONG_COR_MAX_FRAME else None
    liu = None
    if epsilon is not None:
        epsilon = _check_threshold(epsilon)
        liu = LiuConflict(
            k=k,
            dif_betp=db,
            epsilon=epsilon,
            in_conflict=bool(k > epsilon and db > epsilon),
        )
    return ConflictReport(
        k=k, d_bba=d, dif_betp=db, cor=cor, r_bpa=r, k_r=1.0 - r, liu=liu
    )
