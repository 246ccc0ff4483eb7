"""Canonical finite unions of bounded closed intervals.

An :class:`IntervalSet` is the carrier for every set a measure or mean is
evaluated on.  The canonical form is a sorted tuple of pairs ``(lo, hi)``
with ``lo < hi`` and a strictly positive gap between consecutive intervals;
degenerate points are dropped and touching intervals are merged (the
distinction is null for every measure in the catalog, all of which are
atomless).  Values are immutable, so all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptySet, InvalidInterval

Pair = tuple[float, float]


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of disjoint closed intervals, in canonical form.

    Build instances through :func:`normalize`; the raw constructor does not
    re-canonicalize.
    """

    intervals: tuple[Pair, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def lebesgue(self) -> float:
        return math.fsum(hi - lo for lo, hi in self.intervals)

    def infimum(self) -> float:
        if self.is_empty:
            raise EmptySet("infimum of empty interval set")
        return self.intervals[0][0]

    def supremum(self) -> float:
        if self.is_empty:
            raise EmptySet("supremum of empty interval set")
        return self.intervals[-1][1]

    def contains(self, x: float) -> bool:
        return any(lo <= x <= hi for lo, hi in self.intervals)

    def translate(self, x: float) -> "IntervalSet":
        if not math.isfinite(x):
            raise InvalidInterval(f"non-finite translation {x!r}")
        return IntervalSet(tuple((lo + x, hi + x) for lo, hi in self.intervals))

    def slice_below(self, y: float) -> "IntervalSet":
        """Intersection with the half-line (-inf, y]."""
        y = float(y)
        kept = []
        for lo, hi in self.intervals:
            if lo >= y:
                break
            kept.append((lo, min(hi, y)))
        return IntervalSet(tuple(p for p in kept if p[0] < p[1]))

    def slice_above(self, y: float) -> "IntervalSet":
        """Intersection with the half-line [y, +inf)."""
        y = float(y)
        kept = []
        for lo, hi in self.intervals:
            if hi <= y:
                continue
            kept.append((max(lo, y), hi))
        return IntervalSet(tuple(p for p in kept if p[0] < p[1]))

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return normalize(list(self.intervals) + list(other.intervals))

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        i = j = 0
        a, b = self.intervals, other.intervals
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                out.append((lo, hi))
            # advance whichever interval ends first
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet(tuple(out))

    def subtract(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for lo, hi in self.intervals:
            cursor = lo
            for blo, bhi in other.intervals:
                if bhi <= cursor:
                    continue
                if blo >= hi:
                    break
                if blo > cursor:
                    out.append((cursor, min(blo, hi)))
                cursor = max(cursor, bhi)
                if cursor >= hi:
                    break
            if cursor < hi:
                out.append((cursor, hi))
        return IntervalSet(tuple(p for p in out if p[0] < p[1]))

    def symdiff(self, other: "IntervalSet") -> "IntervalSet":
        return self.subtract(other).union(other.subtract(self))

    def is_subset_of(self, other: "IntervalSet") -> bool:
        return self.subtract(other).is_empty

    def is_disjoint_from(self, other: "IntervalSet") -> bool:
        return self.intersect(other).is_empty


def normalize(raw) -> IntervalSet:
    """Canonicalize a sequence of ``(lo, hi)`` pairs into an IntervalSet.

    Sorts, drops zero-length intervals, and merges overlapping or touching
    ones.  Endpoints must be finite and ordered ``lo <= hi``; anything else
    raises :class:`InvalidInterval`.  Endpoints compare exactly as floats,
    there is no epsilon merging.
    """
    cleaned = []
    for lo, hi in raw:
        lo = float(lo)
        hi = float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise InvalidInterval(f"non-finite endpoint in ({lo!r}, {hi!r})")
        if lo > hi:
            raise InvalidInterval(f"reversed interval ({lo!r}, {hi!r})")
        if lo < hi:
            cleaned.append((lo, hi))
    cleaned.sort()
    merged: list[Pair] = []
    for lo, hi in cleaned:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return IntervalSet(tuple(merged))


EMPTY = IntervalSet()
