"""Frames of discernment and basic probability assignments.

Subsets of the frame are plain ``int`` bit masks: bit ``i`` set means the
``i``-th frame label is a member.  This keeps set algebra down to ``&``, ``|``
and ``int.bit_count`` and lets mass functions stay sparse (only focal
elements are stored).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import (
    DuplicateLabelError,
    EmptyFrameError,
    EmptySetMassError,
    FrameMismatchError,
    FrameTooLargeError,
    NegativeMassError,
    UnknownLabelError,
    UnnormalizedMassError,
)

__all__ = [
    "MAX_FRAME_SIZE",
    "MASS_SUM_ACCEPT_TOL",
    "MASS_SUM_RENORMALIZE_TOL",
    "SubsetMask",
    "SubsetAlgebra",
    "Frame",
    "MassFunction",
    "make_frame",
    "parse_subset",
    "render_subset",
    "subset_algebra",
    "make_bpa",
    "bpa_equal",
    "vacuous_bpa",
]

#: Frames are capped so every subset fits a nonnegative 64-bit mask.
MAX_FRAME_SIZE = 63

#: Mass sums within this distance of 1 are accepted as-is.
MASS_SUM_ACCEPT_TOL = 1e-9

#: Mass sums within this distance of 1 are silently renormalized;
#: anything further off is rejected.
MASS_SUM_RENORMALIZE_TOL = 1e-6

#: A subset of a frame, encoded as a bit mask.
SubsetMask = int


class SubsetAlgebra(NamedTuple):
    """Intersection/union of one pair of subsets, with cardinalities."""

    intersection: SubsetMask
    union: SubsetMask
    card_intersection: int
    card_union: int


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment.

    Labels are distinct non-empty strings; their order fixes the bit layout
    of every :data:`SubsetMask` over this frame.
    """

    labels: tuple[str, ...]
    _index: Mapping[str, int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        if not labels:
            raise EmptyFrameError("a frame needs at least one hypothesis")
        if len(labels) > MAX_FRAME_SIZE:
            raise FrameTooLargeError(
                f"{len(labels)} labels exceed the limit of {MAX_FRAME_SIZE}"
            )
        for label in labels:
            if not isinstance(label, str) or not label:
                raise UnknownLabelError(
                    f"labels must be non-empty strings, got {label!r}"
                )
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in index:
                raise DuplicateLabelError(
                    f"label {label!r} appears more than once"
                )
            index[label] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", MappingProxyType(index))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> SubsetMask:
        """The mask of the whole frame (theta)."""
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(
                f"label {label!r} is not part of the frame"
            ) from None

    def subset(self, members: Iterable[str]) -> SubsetMask:
        mask = 0
        for label in members:
            mask |= 1 << self.index(label)
        return mask

    def members(self, mask: SubsetMask) -> tuple[str, ...]:
        self._check_mask(mask)
        return tuple(
            label for i, label in enumerate(self.labels) if mask >> i & 1
        )

    def singletons(self) -> Iterator[SubsetMask]:
        for i in range(len(self.labels)):
            yield 1 << i

    def _check_mask(self, mask: SubsetMask) -> None:
        if not isinstance(mask, int) or mask < 0 or mask > self.full_mask:
            raise UnknownLabelError(
                f"mask {mask!r} does not denote a subset of this frame"
            )


class MassFunction:
    """A basic probability assignment over a :class:`Frame`.

    Stores only focal elements: subset mask -> mass, every stored mass in
    (0, 1], no mass on the empty set, and the total equal to 1 up to
    :data:`MASS_SUM_ACCEPT_TOL`.  Instances are immutable.
    """

    __slots__ = ("_frame", "_focal")

    def __init__(self, frame: Frame, masses: Mapping[SubsetMask, float]):
        focal: dict[SubsetMask, float] = {}
        for mask, value in masses.items():
            frame._check_mask(mask)
            value = float(value)
            if value < 0.0:
                raise NegativeMassError(
                    f"mass {value!r} on {set_to_text(frame, mask)} is negative"
                )
            if value == 0.0:
                continue
            if mask == 0:
                raise EmptySetMassError(
                    "positive mass on the empty set is not allowed"
                )
            focal[mask] = focal.get(mask, 0.0) + value
        total = math.fsum(focal.values())
        if abs(total - 1.0) > MASS_SUM_ACCEPT_TOL:
            raise UnnormalizedMassError(
                f"masses sum to {total!r}, expected 1"
            )
        self._frame = frame
        self._focal = focal

    @property
    def frame(self) -> Frame:
        return self._frame

    @property
    def focal(self) -> Mapping[SubsetMask, float]:
        """Read-only view of the focal elements (mask -> mass)."""
        return MappingProxyType(self._focal)

    def mass(self, mask: SubsetMask) -> float:
        """Mass of an arbitrary subset (0.0 for non-focal subsets)."""
        self._frame._check_mask(mask)
        return self._focal.get(mask, 0.0)

    def items(self) -> Iterable[tuple[SubsetMask, float]]:
        return self._focal.items()

    def __len__(self) -> int:
        return len(self._focal)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self._focal)

    def is_bayesian(self) -> bool:
        """True when every focal element is a singleton."""
        return all(mask.bit_count() == 1 for mask in self._focal)

    def is_vacuous(self) -> bool:
        """True when all mass sits on the whole frame."""
        return set(self._focal) == {self._frame.full_mask}

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{set_to_text(self._frame, mask)}: {value:g}"
            for mask, value in sorted(self._focal.items())
        )
        return f"MassFunction({parts})"


def make_frame(labels: Iterable[str]) -> Frame:
    """Build a frame of discernment from an ordered label sequence."""
    return Frame(tuple(labels))


def parse_subset(frame: Frame, members: Iterable[str]) -> SubsetMask:
    """Resolve a collection of labels to its subset mask."""
    return frame.subset(members)


def render_subset(frame: Frame, mask: SubsetMask) -> tuple[str, ...]:
    """The labels of a subset, in frame order."""
    return frame.members(mask)


def set_to_text(frame: Frame, mask: SubsetMask) -> str:
    """Human-readable form of a subset, e.g. ``{A1, A2}``."""
    if mask == 0:
        return "{}"
    if mask == frame.full_mask:
        return "Theta"
    return "{" + ", ".join(frame.members(mask)) + "}"


def subset_algebra(a: SubsetMask, b: SubsetMask) -> SubsetAlgebra:
    """Intersection, union and their cardinalities for one subset pair."""
    inter = a & b
    union = a | b
    return SubsetAlgebra(inter, union, inter.bit_count(), union.bit_count())


def make_bpa(
    frame: Frame,
    assignments: Iterable[tuple[Iterable[str], float]],
) -> MassFunction:
    """Build a BPA from ``(labels, mass)`` pairs.

    Duplicate subsets are merged by summing, zero-mass entries are dropped.
    A total within :data:`MASS_SUM_RENORMALIZE_TOL` of 1 is renormalized;
    totals further off raise :class:`UnnormalizedMassError`.
    """
    masses: dict[SubsetMask, float] = {}
    for members, value in assignments:
        mask = frame.subset(members)
        value = float(value)
        if value < 0.0:
            raise NegativeMassError(
                f"mass {value!r} on {set_to_text(frame, mask)} is negative"
            )
        if value == 0.0:
            continue
        if mask == 0:
            raise EmptySetMassError(
                "positive mass on the empty set is not allowed"
            )
        masses[mask] = masses.get(mask, 0.0) + value
    total = math.fsum(masses.values())
    deviation = abs(total - 1.0)
    if deviation > MASS_SUM_RENORMALIZE_TOL:
        raise UnnormalizedMassError(f"masses sum to {total!r}, expected 1")
    if deviation > MASS_SUM_ACCEPT_TOL:
        masses = {mask: value / total for mask, value in masses.items()}
    return MassFunction(frame, masses)


def bpa_equal(m1: MassFunction, m2: MassFunction, tol: float = 1e-12) -> bool:
    """True when both BPAs share a frame and agree mass-wise within ``tol``."""
    if m1.frame != m2.frame:
        return False
    for mask in m1.focal.keys() | m2.focal.keys():
        if abs(m1.mass(mask) - m2.mass(mask)) > tol:
            return False
    return True


def vacuous_bpa(frame: Frame) -> MassFunction:
    """The vacuous BPA: all mass on the whole frame."""
    return MassFunction(frame, {frame.full_mask: 1.0})


def require_same_frame(m1: MassFunction, m2: MassFunction) -> Frame:
    """Shared frame of a BPA pair, or :class:`FrameMismatchError`."""
    if m1.frame != m2.frame:
        raise FrameMismatchError(
            f"BPAs are defined over different frames: "
            f"{m1.frame.labels} vs {m2.frame.labels}"
        )
    return m1.frame
