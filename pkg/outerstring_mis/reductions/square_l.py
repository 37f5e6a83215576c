"""
Overlap representation to grounded square-L representation.

Intervals are processed by increasing left endpoint. For each interval the closest
interval lying entirely to its left is found by binary search; whenever that interval
changes, a (interval, offset) tuple is appended to the shift list. Every endpoint right
of a listed interval's right endpoint is then shifted by that tuple's offset, which
pushes disjoint intervals far enough apart that their square-Ls cannot meet, while
overlap and containment are preserved by the monotone shift.
"""

import logging
import time
from bisect import bisect_left
from dataclasses import dataclass, field

import numpy as np

from outerstring_mis.errors import ConstructionMismatch
from outerstring_mis.geometry import Interval, SquareL
from outerstring_mis.reductions.overlap import circle_to_overlap, relabel_overlap
from outerstring_mis.representations.graph import build_intersection_graph, graph_diff
from outerstring_mis.representations.models import CircleRep, GroundedSquareLRep, MisStats, OverlapRep

logger = logging.getLogger(__name__)


@dataclass
class ShiftList:
    """Ordered (interval id, offset) tuples; offsets and right endpoints strictly increase"""

    entries: list[tuple[str, int]] = field(default_factory=list)
    right_endpoints: list[int] = field(default_factory=list)

    def append(self, interval: Interval, offset: int) -> None:
        self.entries.append((interval.id, offset))
        self.right_endpoints.append(interval.hi)

    @property
    def tail_id(self) -> str | None:
        return self.entries[-1][0] if self.entries else None

    @property
    def tail_offset(self) -> int:
        return self.entries[-1][1] if self.entries else 0

    def shift_at(self, x: int) -> int:
        """Offset of the last tuple whose interval ends strictly left of x, 0 if none"""
        k = bisect_left(self.right_endpoints, x) - 1
        return self.entries[k][1] if k >= 0 else 0

    def is_well_formed(self) -> bool:
        offsets = [o for _, o in self.entries]
        return all(a < b for a, b in zip(offsets, offsets[1:])) and all(
            a < b for a, b in zip(self.right_endpoints, self.right_endpoints[1:])
        )

    def __len__(self) -> int:
        return len(self.entries)


def _build_shift_list(intervals: list[Interval], stats: MisStats) -> ShiftList:
    """Closest-left lookups and offset computation; every lookup is counted in stats.queries"""
    shifts = ShiftList()
    by_left = sorted(intervals, key=lambda iv: iv.lo)
    by_right = sorted(intervals, key=lambda iv: iv.hi)
    rights = np.array([iv.hi for iv in by_right], dtype=np.int64)
    closest = np.searchsorted(rights, np.array([iv.lo for iv in by_left], dtype=np.int64), side="left") - 1
    stats.queries += len(by_left)

    # running max of K'_lo + K'_hi over intervals K absorbed so far (K_hi <= current J_hi)
    reach = None
    absorbed = 0
    for idx in closest:
        if idx < 0:
            continue
        j = by_right[idx]
        if j.id == shifts.tail_id:
            continue
        gamma = shifts.tail_offset
        while absorbed < len(by_right) and by_right[absorbed].hi <= j.hi:
            k = by_right[absorbed]
            stats.queries += 1
            candidate = k.lo + shifts.shift_at(k.lo) + k.hi + gamma
            reach = candidate if reach is None else max(reach, candidate)
            absorbed += 1
        shifts.append(j, reach - j.hi + 1)
    return shifts


def overlap_to_square_l(
    o: OverlapRep, self_check: bool = True
) -> tuple[GroundedSquareLRep, ShiftList, MisStats]:
    """
    Grounded square-L representation of an overlap graph

    Args:
        o: Validated overlap representation; endpoints are relabeled first when any is negative
        self_check: Compare both intersection graphs and raise on any difference

    Returns:
        (square-L representation, shift list, stats with the lookup count in `queries`)
    """
    start = time.perf_counter()
    if o.intervals and min(iv.lo for iv in o.intervals) < 0:
        o = relabel_overlap(o)
    stats = MisStats()
    shifts = _build_shift_list(o.intervals, stats)
    if stats.queries > 2 * len(o.intervals):
        raise AssertionError(f"{stats.queries} lookups exceed 2n = {2 * len(o.intervals)}")

    squares = []
    for iv in o.intervals:
        lo = iv.lo + shifts.shift_at(iv.lo)
        hi = iv.hi + shifts.shift_at(iv.hi)
        squares.append(SquareL(lo, hi, iv.id))
    rep = GroundedSquareLRep(len(squares), squares, weights=o.weights)
    if not shifts.is_well_formed():
        raise ConstructionMismatch("construction mismatch: shift list offsets not increasing")
    stats.wall_ms = (time.perf_counter() - start) * 1000
    logger.info("square-L reduction: n=%d, %d shifts, %d lookups", len(squares), len(shifts), stats.queries)

    if self_check:
        diff = graph_diff(build_intersection_graph(o), build_intersection_graph(rep))
        if diff:
            raise ConstructionMismatch(f"construction mismatch: {diff}")
    return rep, shifts, stats


def circle_to_square_l(c: CircleRep, self_check: bool = True) -> tuple[GroundedSquareLRep, ShiftList, MisStats]:
    """Circle representation straight to grounded square-Ls via the overlap representation"""
    return overlap_to_square_l(circle_to_overlap(c), self_check=self_check)
