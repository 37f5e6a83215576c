"""
Divide-and-conquer approximation of maximum-weight independent sets of L-shapes and
axis-parallel rectangles.

Shapes are ordered by the x of their vertical segment (left side for rectangles) and a
dummy line is placed right of everything. I[i, j] holds the shapes of positions i..j
that do not cross the line of position j+1; S[i, j] is the best of
  - an exact answer, when I[i, j] has no independent set of five shapes, or
  - over i < k < j, the larger of S[i, k-1] + S[k+1, j] (the two sides are separated
    by the line of k) and the exact optimum T of the shapes of I[i, j] crossing that line.
Shapes crossing one vertical line form an outerstring instance (an interval instance
for rectangles), so T is solved exactly. The result is within a factor
max(1, log2 OPT) of the optimum.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from outerstring_mis.config import SMALL_OPT_CARDINALITY
from outerstring_mis.errors import IncompatibleInputError
from outerstring_mis.geometry import Interval, LKind, LShape, Rectangle, crosses_vertical_line
from outerstring_mis.representations.graph import build_intersection_graph, verify_independent
from outerstring_mis.representations.models import IntersectionGraph, LShapeSet, MisResult, MisStats, RectangleSet
from outerstring_mis.solvers.branch_bound import outerstring_mwis_exact
from outerstring_mis.solvers.interval import interval_mwis

logger = logging.getLogger(__name__)


@dataclass
class ShapeOrder:
    """Shapes at positions 1..n by vertical-segment x (ties by id) plus the dummy line n+1"""

    shapes: list[LShape | Rectangle]
    dummy_x: int

    def line(self, k: int) -> int:
        """x of the vertical line through position k (1-based)"""
        if k == len(self.shapes) + 1:
            return self.dummy_x
        return _vertical_x(self.shapes[k - 1])

    def at(self, k: int) -> LShape | Rectangle:
        return self.shapes[k - 1]

    @property
    def ids(self) -> list[str]:
        return [s.id for s in self.shapes]

    def __len__(self) -> int:
        return len(self.shapes)


@dataclass
class ApproxTable:
    # (i, j) -> (value, split position k; 0 when solved exactly or empty)
    s: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)
    # (i, j, k) -> exact value of the shapes of I[i, j] crossing the line of k
    t: dict[tuple[int, int, int], int] = field(default_factory=dict)


def _vertical_x(shape: LShape | Rectangle) -> int:
    return shape.vertical_x if isinstance(shape, LShape) else shape.x1


def order_shapes(shapes: Sequence[LShape | Rectangle]) -> ShapeOrder:
    """
    Order a single-quadrant L-shape set or a rectangle set for the recurrence

    Args:
        shapes: All UL-type L-shapes of one kind, or rectangles

    Returns:
        ShapeOrder whose dummy line lies strictly right of every shape
    """
    kinds = {s.kind for s in shapes if isinstance(s, LShape)}
    if len(kinds) > 1:
        raise IncompatibleInputError(f"mixed kinds: {sorted(k.value for k in kinds)}")
    ordered = sorted(shapes, key=lambda s: (_vertical_x(s), s.id))
    dummy_x = max((s.max_x for s in shapes), default=0) + 1
    return ShapeOrder(ordered, dummy_x)


def restricted_set(order: ShapeOrder, i: int, j: int) -> list[int]:
    """Positions of I[i, j]: i..j whose shape does not cross the line of position j+1"""
    x = order.line(j + 1)
    return [y for y in range(i, j + 1) if not crosses_vertical_line(order.at(y), x)]


def crossing_set(order: ShapeOrder, i: int, j: int, k: int) -> list[int]:
    """Positions i..j whose shape meets the line of position k"""
    x = order.line(k)
    return [y for y in range(i, j + 1) if crosses_vertical_line(order.at(y), x)]


def _has_independent_set(cand: int, need: int, masks: list[int]) -> bool:
    """Depth-bounded branching: does cand contain `need` pairwise non-adjacent vertices?"""
    if need == 0:
        return True
    if cand.bit_count() < need:
        return False
    v = (cand & -cand).bit_length() - 1
    rest = cand & ~(1 << v)
    return _has_independent_set(rest & ~masks[v], need - 1, masks) or _has_independent_set(rest, need, masks)


def small_opt_exact(
    graph: IntersectionGraph, subset: Sequence[str], weights: Optional[dict[str, int]] = None
) -> Optional[MisResult]:
    """
    Exact answer for subsets whose independent sets have at most four shapes

    Args:
        graph: Intersection graph containing the subset
        subset: Ids to consider
        weights: id -> weight (>= 1)

    Returns:
        The exact MWIS of the subset, or None when an independent set of five shapes exists
    """
    sub = graph.subgraph(subset)
    _, masks = sub.bitmasks()
    if _has_independent_set((1 << len(sub)) - 1, SMALL_OPT_CARDINALITY + 1, masks):
        return None
    return outerstring_mwis_exact(sub, {v: (weights or {}).get(v, 1) for v in subset})


class DivideAndConquer:
    """One approximation run over an ordered single-quadrant L-shape or rectangle set"""

    def __init__(self, shapes: Sequence[LShape | Rectangle], weights: Optional[dict[str, int]], crossing_solver: Callable):
        self.order = order_shapes(shapes)
        self.weights = {s.id: (weights or {}).get(s.id, 1) for s in shapes}
        self.graph = build_intersection_graph(
            RectangleSet(list(shapes)) if shapes and isinstance(shapes[0], Rectangle) else LShapeSet(list(shapes))
        )
        self.crossing_solver = crossing_solver
        self.table = ApproxTable()
        self.stats = MisStats()
        self._chosen: dict[tuple[int, int], frozenset[str]] = {}
        # T entries are shared between (i, j, k) triples with the same crossing shapes
        self._crossing: dict[frozenset[str], MisResult] = {}

    def _exact_crossing(self, ids: frozenset[str]) -> MisResult:
        if ids not in self._crossing:
            self.stats.nodes += 1
            self._crossing[ids] = self.crossing_solver(self, ids)
        return self._crossing[ids]

    def solve(self, i: int, j: int) -> tuple[int, frozenset[str]]:
        """S[i, j] and the independent subset of I[i, j] realising it"""
        if (i, j) in self.table.s:
            return self.table.s[(i, j)][0], self._chosen[(i, j)]
        self.stats.subproblems += 1
        positions = restricted_set(self.order, i, j) if i <= j else []
        members = [self.order.at(y).id for y in positions]

        if not members:
            value, chosen, split = 0, frozenset(), 0
        elif (small := small_opt_exact(self.graph, members, self.weights)) is not None:
            value, chosen, split = small.value, small.chosen, 0
        else:
            member_set = set(members)
            value, chosen, split = -1, frozenset(), 0
            # every split is tried; on equal values the one nearest the weighted median wins
            median = weighted_median_split(positions, [self.weights[id] for id in members])
            for k in sorted(range(i + 1, j), key=lambda k: (abs(k - median), k)):
                left_value, left = self.solve(i, k - 1)
                right_value, right = self.solve(k + 1, j)
                crossing = frozenset(
                    self.order.at(y).id for y in crossing_set(self.order, i, j, k) if self.order.at(y).id in member_set
                )
                exact = self._exact_crossing(crossing)
                self.table.t[(i, j, k)] = exact.value
                if left_value + right_value > value:
                    if not self.graph.is_independent(left | right):
                        raise AssertionError(f"split at {k} joined intersecting shapes")
                    value, chosen, split = left_value + right_value, left | right, k
                if exact.value > value:
                    value, chosen, split = exact.value, exact.chosen, k

        if not self.graph.is_independent(chosen):
            raise AssertionError(f"S[{i},{j}] is not independent")
        self.table.s[(i, j)] = (value, split)
        self._chosen[(i, j)] = chosen
        return value, chosen

    def run(self) -> MisResult:
        start = time.perf_counter()
        value, chosen = self.solve(1, len(self.order))
        verify_independent(self.graph, chosen)
        self.stats.wall_ms = (time.perf_counter() - start) * 1000
        return MisResult(chosen, value, self.stats)


def _outerstring_crossing(run: DivideAndConquer, ids: frozenset[str]) -> MisResult:
    return outerstring_mwis_exact(run.graph.subgraph(ids), run.weights)


def _interval_crossing(run: DivideAndConquer, ids: frozenset[str]) -> MisResult:
    rects = [r for r in run.order.shapes if r.id in ids]
    return interval_mwis([Interval(r.y1, r.y2, r.id) for r in rects], run.weights)


def reflect_to_upper_left(shapes: Sequence[LShape]) -> list[LShape]:
    """Mirror every shape of one kind onto the UL kind; ids and intersections are preserved"""
    flips = {LKind.UL: (False, False), LKind.UR: (True, False), LKind.LL: (False, True), LKind.LR: (True, True)}
    return [s.reflect(*flips[s.kind]) for s in shapes]


def approx_quadrant(shapes: LShapeSet, weights: Optional[dict[str, int]] = None) -> MisResult:
    """
    Approximate MWIS of single-kind L-shapes; other kinds than UL are reflected first

    Args:
        shapes: LShapeSet of a single kind
        weights: id -> weight (>= 1); defaults to the set's weights

    Returns:
        MisResult with value >= OPT / max(1, log2 OPT)
    """
    weights = weights if weights is not None else shapes.weight_map()
    canonical = reflect_to_upper_left(shapes.lshapes)
    result = DivideAndConquer(canonical, weights, _outerstring_crossing).run()
    logger.debug("quadrant approximation: n=%d value=%d", len(canonical), result.value)
    return result


def approx_all_quadrants(shapes: LShapeSet, weights: Optional[dict[str, int]] = None) -> MisResult:
    """
    Approximate MWIS of L-shapes of any kinds: the best single-kind answer

    Returns:
        MisResult with value >= OPT / (4 * max(1, log2 OPT))
    """
    weights = weights if weights is not None else shapes.weight_map()
    best = MisResult(frozenset(), 0)
    stats = MisStats()
    for kind in LKind:
        group = [s for s in shapes.lshapes if s.kind is kind]
        if not group:
            continue
        result = approx_quadrant(LShapeSet(group), weights)
        stats.subproblems += result.stats.subproblems
        stats.nodes += result.stats.nodes
        stats.wall_ms += result.stats.wall_ms
        if result.value > best.value:
            best = result
    return MisResult(best.chosen, best.value, stats)


def approx_rectangles(rects: RectangleSet, weights: Optional[dict[str, int]] = None) -> MisResult:
    """
    Approximate MWIS of axis-parallel rectangles; crossing sets are solved as interval instances

    Returns:
        MisResult with value >= OPT / max(1, log2 OPT)
    """
    weights = weights if weights is not None else rects.weight_map()
    result = DivideAndConquer(rects.rectangles, weights, _interval_crossing).run()
    logger.debug("rectangle approximation: n=%d value=%d", len(rects.rectangles), result.value)
    return result


def weighted_median_split(positions: Sequence[int], weights: Sequence[int]) -> int:
    """
    The weighted median position: the shapes before it and the shapes after it each weigh
    at most half of the total

    Args:
        positions: Ordered positions
        weights: Weight of each position

    Returns:
        The median position
    """
    if not positions:
        raise ValueError("empty sequence")
    cumulative = np.cumsum(np.asarray(weights, dtype=np.int64))
    total = int(cumulative[-1])
    idx = int(np.searchsorted(2 * cumulative, total, side="left"))
    return positions[min(idx, len(positions) - 1)]
