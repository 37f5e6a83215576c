"""
Exact maximum-weight independent set of a circle (overlap) graph in O(n^2)

M[i][j] is the best weight of intervals nested inside the endpoint range [i, j]. When
the partner k of endpoint j lies in [i, j), the interval (k, j) may be taken together
with the best of [i, k-1] and of [k+1, j-1]; intervals nested in disjoint or nested
ranges never properly overlap, so the combination is independent.
"""

import logging
import time
from typing import Optional

import numpy as np

from outerstring_mis.geometry import Interval
from outerstring_mis.representations.models import MisResult, MisStats, OverlapRep

logger = logging.getLogger(__name__)


def _is_laminar(intervals: list[Interval]) -> bool:
    """No two intervals properly overlap: every pair is nested or disjoint"""
    open_his: list[int] = []
    for iv in sorted(intervals, key=lambda iv: iv.lo):
        while open_his and open_his[-1] < iv.lo:
            open_his.pop()
        if open_his and open_his[-1] < iv.hi:
            return False
        open_his.append(iv.hi)
    return True


def circle_mwis(o: OverlapRep, weights: Optional[dict[str, int]] = None) -> MisResult:
    """
    Circle-graph DP over endpoint ranges, vectorised one column at a time

    Args:
        o: Validated overlap representation (endpoints need not be relabeled)
        weights: id -> weight, default to the representation's weights

    Returns:
        MisResult; stats.subproblems counts table cells
    """
    start = time.perf_counter()
    weights = weights if weights is not None else o.weight_map()
    n = len(o.intervals)
    size = 2 * n
    stats = MisStats()
    if n == 0:
        return MisResult(frozenset(), 0, stats)

    endpoints = np.array([e for iv in o.intervals for e in (iv.lo, iv.hi)], dtype=np.int64)
    rank = np.empty(size, dtype=np.int64)
    rank[np.argsort(endpoints, kind="stable")] = np.arange(size)
    lo_rank, hi_rank = rank[0::2], rank[1::2]

    # partner[j] = left endpoint rank of the interval ending at j, or -1
    partner = np.full(size, -1, dtype=np.int64)
    partner[hi_rank] = lo_rank
    owner = np.full(size, -1, dtype=np.int64)
    owner[hi_rank] = np.arange(n)
    w = np.array([weights.get(iv.id, 1) for iv in o.intervals], dtype=np.int64)

    # table[i, j + 1] = M[i][j]; table[i, i] = 0 is the empty range; column-major for the column sweep
    table = np.zeros((size + 1, size + 1), dtype=np.int64, order="F")
    for j in range(size):
        table[: j + 1, j + 1] = table[: j + 1, j]
        k = partner[j]
        if k >= 0:
            candidate = table[: k + 1, k] + table[k + 1, j] + w[owner[j]]
            np.maximum(table[: k + 1, j + 1], candidate, out=table[: k + 1, j + 1])
    stats.subproblems = size * (size + 1) // 2

    chosen = []
    stack = [(0, size - 1)]
    while stack:
        i, j = stack.pop()
        while j >= i and table[i, j + 1] == table[i, j]:
            j -= 1
        if j < i:
            continue
        k = int(partner[j])
        chosen.append(o.intervals[owner[j]].id)
        stack.append((i, k - 1))
        stack.append((k + 1, j - 1))

    value = int(table[0, size])
    chosen_set = frozenset(chosen)
    if not _is_laminar([iv for iv in o.intervals if iv.id in chosen_set]):
        raise AssertionError(f"returned set is not independent: {sorted(chosen)}")
    stats.wall_ms = (time.perf_counter() - start) * 1000
    logger.debug("circle DP: n=%d value=%d in %.1f ms", n, value, stats.wall_ms)
    return MisResult(chosen_set, value, stats)
