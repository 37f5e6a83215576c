"""
Maximum-weight set of pairwise disjoint closed intervals
"""

import time
from bisect import bisect_left
from typing import Optional, Sequence

from outerstring_mis.geometry import Interval
from outerstring_mis.representations.models import MisResult, MisStats


def interval_mwis(intervals: Sequence[Interval], weights: Optional[dict[str, int]] = None) -> MisResult:
    """
    Classic weighted interval scheduling: sort by right endpoint, binary search the last
    compatible predecessor, then a linear DP. Closed intervals, so touching endpoints overlap.

    Args:
        intervals: Intervals on a line
        weights: id -> weight (>= 0), default 1

    Returns:
        MisResult with stats.queries = number of predecessor searches
    """
    start = time.perf_counter()
    weights = weights or {}
    ordered = sorted(intervals, key=lambda iv: (iv.hi, iv.lo, iv.id))
    his = [iv.hi for iv in ordered]
    stats = MisStats()

    # best[k] = optimum over the first k intervals
    best = [0] * (len(ordered) + 1)
    take = [False] * len(ordered)
    previous = [0] * len(ordered)
    for k, iv in enumerate(ordered):
        previous[k] = bisect_left(his, iv.lo)  # intervals ending strictly before iv.lo
        stats.queries += 1
        with_it = best[previous[k]] + weights.get(iv.id, 1)
        take[k] = with_it > best[k]
        best[k + 1] = with_it if take[k] else best[k]
        stats.subproblems += 1

    chosen = []
    k = len(ordered)
    while k > 0:
        if take[k - 1]:
            chosen.append(ordered[k - 1].id)
            k = previous[k - 1]
        else:
            k -= 1

    stats.wall_ms = (time.perf_counter() - start) * 1000
    return MisResult(frozenset(chosen), best[-1], stats)
