"""
Exact maximum independent set of bounded integral y-monotone rectilinear strings.

A subproblem is a region between two separators grounded at a < b, holding the strings
grounded in (a, b] that lie strictly right of the left separator and weakly left of the
right one. It is split at the lower median q of its distinct ground points: every
separator M from q partitions the region into the strings grounded <= q lying weakly
left of M and the strings grounded > q lying strictly right of M, and the best split
over all M is taken. Regions whose strings share one ground point hold a clique.

A region is fully described by (a, b) and the strings of (a, b] that its separators cut
off, so the memo is keyed on exactly that; separators inducing the same or a dominated
partition are skipped.

Strings that run along the grounding line are lifted first (see lift_ground_runs).
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from outerstring_mis.geometry import GroundedString, Point
from outerstring_mis.representations.graph import build_intersection_graph, verify_independent
from outerstring_mis.representations.models import BoundedStringRep, MisResult, MisStats, OuterstringRep
from outerstring_mis.solvers.separators import (
    SeparatorPath,
    enumerate_separators,
    separator_profiles,
    string_profile,
    vertical_separator,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DpKey:
    a: int
    b: int
    excluded: frozenset[int]
    ma: Optional[SeparatorPath] = field(default=None, compare=False)
    mb: Optional[SeparatorPath] = field(default=None, compare=False)


@dataclass
class _Split:
    value: int
    left: Optional[DpKey] = None
    right: Optional[DpKey] = None
    pick: Optional[int] = None  # base case: the single string taken


class _BoundedDp:
    """One solve; string indices refer to the strings sorted by (ground x, id)"""

    def __init__(self, rep: BoundedStringRep):
        self.kappa = rep.kappa
        self.strings = sorted(rep.strings, key=lambda s: (s.ground.x, s.id))
        self.grounds = np.array([s.ground.x for s in self.strings], dtype=np.int64)
        profiles = [string_profile(s, self.kappa) for s in self.strings]
        width = 2 * self.kappa + 1
        self.mins = np.array([p[0] for p in profiles], dtype=np.int64).reshape(-1, width)
        self.maxs = np.array([p[1] for p in profiles], dtype=np.int64).reshape(-1, width)
        self.separators = enumerate_separators(0, self.kappa)
        self.offsets = separator_profiles(self.kappa)
        # horizontal reach of a separator plus the reach of a string around its ground point
        self.near = self.kappa * (self.kappa + 1) + self.kappa + 1
        self.memo: dict[DpKey, _Split] = {}
        self.stats = MisStats()

    def _range(self, a: int, b: int) -> tuple[int, int]:
        lo = int(np.searchsorted(self.grounds, a, side="right"))
        hi = int(np.searchsorted(self.grounds, b, side="right"))
        return lo, hi

    def solve(self, key: DpKey) -> int:
        cached = self.memo.get(key)
        if cached is not None:
            return cached.value
        self.stats.subproblems += 1

        lo, hi = self._range(key.a, key.b)
        members = np.array([i for i in range(lo, hi) if i not in key.excluded], dtype=np.int64)
        distinct = np.unique(self.grounds[members]) if members.size else members
        if distinct.size <= 1:
            split = _Split(1, pick=int(members[0])) if members.size else _Split(0)
            self.memo[key] = split
            return split.value

        q = int(distinct[(distinct.size - 1) // 2])
        mid = int(np.searchsorted(self.grounds, q, side="right"))
        near_lo = int(np.searchsorted(self.grounds, q - self.near, side="left"))
        near_hi = int(np.searchsorted(self.grounds, q + self.near, side="right"))
        near = np.array([i for i in range(max(lo, near_lo), min(hi, near_hi)) if i not in key.excluded], dtype=np.int64)

        # which near strings each separator keeps on their own side
        right_edge = self.offsets + q  # (F, 2*kappa+1)
        left_ok = np.all(self.maxs[near][None, :, :] <= right_edge[:, None, :], axis=2)
        right_ok = np.all(self.mins[near][None, :, :] > right_edge[:, None, :], axis=2)
        on_left = near < mid
        kept = np.where(on_left[None, :], left_ok, right_ok)

        # dedupe by the set of dropped near strings, keep only inclusion-minimal drops
        masks, first = np.unique(~kept, axis=0, return_index=True)
        subset = np.all(masks[:, None, :] <= masks[None, :, :], axis=2)  # subset[r, s]: drop r within drop s
        np.fill_diagonal(subset, False)
        minimal = np.flatnonzero(~subset.any(axis=0))

        best = _Split(-1)
        for r in sorted(minimal, key=lambda r: first[r]):
            dropped = frozenset(int(i) for i in near[masks[r]])
            separator = self.separators[int(first[r])].translated(q)
            excluded = key.excluded | dropped
            left = DpKey(key.a, q, frozenset(i for i in excluded if lo <= i < mid), key.ma, separator)
            right = DpKey(q, key.b, frozenset(i for i in excluded if mid <= i < hi), separator, key.mb)
            value = self.solve(left) + self.solve(right)
            if value > best.value:
                best = _Split(value, left, right)
        self.memo[key] = best
        return best.value

    def chosen(self, root: DpKey) -> list[int]:
        picked, stack = [], [root]
        while stack:
            split = self.memo[stack.pop()]
            if split.pick is not None:
                picked.append(split.pick)
            stack.extend(k for k in (split.left, split.right) if k is not None)
        return picked


def has_ground_runs(rep: BoundedStringRep) -> bool:
    """Whether some string runs along the grounding line past its first vertex"""
    return any(s.vertices[1].y == 0 for s in rep.strings if len(s.vertices) > 1)


def lift_ground_runs(rep: BoundedStringRep) -> BoundedStringRep:
    """
    Raise every string one unit and join it to its first ground point with a unit stub

    Raised paths keep their pairwise intersections, and a stub meets another string only
    where that string passes through the stub's ground point, so the intersection graph
    is unchanged. Afterwards every string touches y = 0 at its first vertex only, which is
    what separators from single ground points can split. Kappa grows by one.

    Args:
        rep: Validated BoundedStringRep

    Returns:
        rep itself when no string has a ground run, else the lifted copy
    """
    if not has_ground_runs(rep):
        return rep
    lifted = []
    for s in rep.strings:
        raised = [Point(p.x, p.y + 1) for p in s.vertices]
        if s.vertices[1].x == s.ground.x:
            # climbs first: the stub extends the first segment
            raised = raised[1:]
        lifted.append(GroundedString((s.ground, *raised), s.id, weight=s.weight))
    return BoundedStringRep(lifted, rep.kappa + 1, weights=rep.weights)


def bounded_monotone_mis(rep: BoundedStringRep) -> MisResult:
    """
    Exact MIS (cardinality) of a bounded string representation

    Args:
        rep: Validated BoundedStringRep

    Returns:
        MisResult; stats.subproblems counts distinct memo entries
    """
    start = time.perf_counter()
    if not rep.strings:
        return MisResult(frozenset(), 0, MisStats())
    work = lift_ground_runs(rep)
    if work is not rep:
        logger.debug("ground runs present: solving with kappa %d", work.kappa)
    dp = _BoundedDp(work)
    xs = [p.x for s in work.strings for p in s.vertices]
    root = DpKey(
        int(dp.grounds[0]) - 1,
        int(dp.grounds[-1]),
        frozenset(),
        vertical_separator(min(xs) - 1, work.kappa),
        vertical_separator(max(xs) + 1, work.kappa),
    )
    value = dp.solve(root)

    ids = frozenset(dp.strings[i].id for i in dp.chosen(root))
    if len(ids) != value:
        raise AssertionError(f"reconstructed {len(ids)} strings for value {value}")
    chosen_rep = OuterstringRep([s for s in rep.strings if s.id in ids])
    verify_independent(build_intersection_graph(chosen_rep), ids)
    dp.stats.wall_ms = (time.perf_counter() - start) * 1000
    logger.info(
        "bounded DP: n=%d kappa=%d value=%d subproblems=%d in %.1f ms",
        len(rep.strings), rep.kappa, value, dp.stats.subproblems, dp.stats.wall_ms,
    )
    return MisResult(ids, value, dp.stats)
