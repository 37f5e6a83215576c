"""
Intersection graph construction, graph comparison and the brute-force MWIS oracle
"""

import logging
import time
from functools import lru_cache
from typing import Callable, Optional

from outerstring_mis.config import ORACLE_VERTEX_LIMIT
from outerstring_mis.errors import IncompatibleInputError, SizeGuardError
from outerstring_mis.geometry import (
    Chord,
    GroundedString,
    Interval,
    LShape,
    Rectangle,
    SquareL,
    chords_cross,
    polyline_intersect,
    proper_overlap,
    rectangles_intersect,
    segments_intersect,
)
from outerstring_mis.representations.models import (
    CircleRep,
    GroundedSegmentRep,
    IntersectionGraph,
    MisResult,
    MisStats,
    OverlapRep,
    Representation,
)

logger = logging.getLogger(__name__)


def _x_extent(shape) -> tuple[int, int]:
    match shape:
        case Interval(lo, hi, _):
            return lo, hi
        case Chord(p, q, _):
            return p, q
        case SquareL(gx, arm, _):
            return gx, gx + arm
        case LShape() | Rectangle():
            return shape.min_x, shape.max_x
        case GroundedString():
            xs = [p.x for p in shape.vertices]
            return min(xs), max(xs)
    raise IncompatibleInputError(f"no geometry for shape {shape!r}")


def _sweep_edges(shapes: list, intersects: Callable, overlapping_only: bool) -> list[tuple[str, str]]:
    """Pairwise test, skipping pairs whose x-extents are disjoint when that implies disjointness"""
    if not overlapping_only:
        return [
            (a.id, b.id)
            for i, a in enumerate(shapes)
            for b in shapes[i + 1 :]
            if intersects(a, b)
        ]
    ordered = sorted(shapes, key=lambda s: _x_extent(s)[0])
    extents = [_x_extent(s) for s in ordered]
    edges = []
    for i, a in enumerate(ordered):
        right = extents[i][1]
        for j in range(i + 1, len(ordered)):
            if extents[j][0] > right:
                break
            if intersects(a, ordered[j]):
                edges.append((a.id, ordered[j].id))
    return edges


def _shape_predicate(sample) -> Callable:
    match sample:
        case Rectangle():
            return rectangles_intersect
        case Interval():
            return proper_overlap
        case Chord():
            return chords_cross
    return polyline_intersect


def build_intersection_graph(rep: Representation, exact: bool = False) -> IntersectionGraph:
    """
    Build the intersection graph of a representation

    Args:
        rep: Any representation
        exact: For grounded segment representations, test the denoted segments
            (i,0)-(j,2^j) with exact integer geometry instead of proper overlap

    Returns:
        IntersectionGraph over the representation's ids
    """
    shapes = list(rep.shapes)
    ids = [s.id for s in shapes]
    if not shapes:
        return IntersectionGraph(ids)

    if isinstance(rep, GroundedSegmentRep) and exact:
        segs = {s.id: GroundedSegmentRep.denoted_segment(s) for s in shapes}
        edges = _sweep_edges(shapes, lambda a, b: segments_intersect(segs[a.id], segs[b.id]), True)
    elif isinstance(rep, CircleRep):
        # chords on a circle have no useful x-order pruning beyond the position span
        edges = _sweep_edges(shapes, chords_cross, True)
    else:
        edges = _sweep_edges(shapes, _shape_predicate(shapes[0]), True)

    graph = IntersectionGraph(ids, edges)
    logger.debug("built %s from %s", graph, type(rep).__name__)
    return graph


def graphs_equal(g1: IntersectionGraph, g2: IntersectionGraph) -> bool:
    """Edge-set equality of two graphs over the same vertex ids"""
    if set(g1.vertices) != set(g2.vertices):
        raise IncompatibleInputError("vertex mismatch")
    return g1.edge_set() == g2.edge_set()


def graph_diff(g1: IntersectionGraph, g2: IntersectionGraph, limit: int = 10) -> list[tuple[str, str, str]]:
    """Up to `limit` differing pairs as (u, v, which-graph-has-it), sorted"""
    if set(g1.vertices) != set(g2.vertices):
        raise IncompatibleInputError("vertex mismatch")
    e1, e2 = g1.edge_set(), g2.edge_set()
    diff = [(*sorted(e), "first") for e in e1 - e2] + [(*sorted(e), "second") for e in e2 - e1]
    return sorted(diff)[:limit]


def verify_independent(graph: IntersectionGraph, chosen) -> None:
    """Hard check applied to every solver result before it is returned"""
    if not graph.is_independent(chosen):
        raise AssertionError(f"returned set is not independent: {sorted(chosen)}")


def brute_force_mwis(graph: IntersectionGraph, weights: Optional[dict[str, int]] = None) -> MisResult:
    """
    Exact maximum-weight independent set by exhaustive branching

    Branches on the smallest remaining id (take it or drop it), memoised on the candidate
    bitmask. Among optimal sets the lexicographically smallest sorted id tuple wins.

    Args:
        graph: Graph with at most ORACLE_VERTEX_LIMIT vertices
        weights: id -> weight, default 1

    Returns:
        MisResult with the optimum
    """
    if len(graph) > ORACLE_VERTEX_LIMIT:
        raise SizeGuardError(f"too large: {len(graph)} vertices > {ORACLE_VERTEX_LIMIT}")
    start = time.perf_counter()
    order, masks = graph.bitmasks()
    w = [(weights or {}).get(v, 1) for v in order]
    stats = MisStats()

    @lru_cache(maxsize=None)
    def best(cand: int) -> tuple[int, tuple[int, ...]]:
        stats.subproblems += 1
        if cand == 0:
            return 0, ()
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        take_value, take_set = best(rest & ~masks[v])
        take = (take_value + w[v], (v,) + take_set)
        if masks[v] & rest == 0 and w[v] >= 0:
            return take
        skip = best(rest)
        if skip[0] > take[0]:
            return skip
        # index order equals id order, so the set containing v is lexicographically first
        return take

    value, chosen = best((1 << len(order)) - 1)
    best.cache_clear()
    stats.wall_ms = (time.perf_counter() - start) * 1000
    result = MisResult(frozenset(order[i] for i in chosen), value, stats)
    verify_independent(graph, result.chosen)
    return result
