"""
Exact maximum-weight independent set by branch and bound on bitmasks
"""

import logging
import time
from typing import Optional

from outerstring_mis.representations.graph import build_intersection_graph, verify_independent
from outerstring_mis.representations.models import IntersectionGraph, MisResult, MisStats, Representation

logger = logging.getLogger(__name__)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _preferred(a: int, b: int) -> bool:
    """Set a beats set b of equal value: the smallest id in exactly one of them is in a"""
    diff = a ^ b
    return a & diff & -diff != 0


def clique_cover_bound(cand: int, masks: list[int], by_weight: list[int], w: list[int]) -> int:
    """
    Greedy weighted clique cover of the candidate set: vertices in descending weight join
    the first clique they are fully adjacent to. An independent set takes at most one
    vertex per clique, so the sum of clique maxima bounds its weight.

    Args:
        cand: Candidate vertex bitmask
        masks: Neighbourhood bitmask per vertex
        by_weight: All vertex indices sorted by descending weight
        w: Weight per vertex

    Returns:
        Upper bound on the best weight inside cand
    """
    cliques: list[int] = []
    bound = 0
    for v in by_weight:
        if not cand >> v & 1:
            continue
        for idx, members in enumerate(cliques):
            if members & ~masks[v] == 0:
                cliques[idx] = members | (1 << v)
                break
        else:
            cliques.append(1 << v)
            bound += w[v]
    return bound


def outerstring_mwis_exact(
    source: Representation | IntersectionGraph, weights: Optional[dict[str, int]] = None
) -> MisResult:
    """
    Exact MWIS: branch on the maximum-degree candidate (take it or drop it), take isolated
    candidates outright, prune when the clique cover bound cannot reach the incumbent.
    Ties break as in brute_force_mwis, towards the set holding the smallest differing id.

    Args:
        source: Any representation (its intersection graph is built) or a graph
        weights: id -> weight (>= 0); defaults to the representation's weights, else 1

    Returns:
        MisResult with stats.nodes = branch nodes visited
    """
    start = time.perf_counter()
    if isinstance(source, IntersectionGraph):
        graph = source
    else:
        graph = build_intersection_graph(source)
        if weights is None:
            weights = source.weight_map()
    order, masks = graph.bitmasks()
    w = [(weights or {}).get(v, 1) for v in order]
    by_weight = sorted(range(len(order)), key=lambda v: (-w[v], v))
    stats = MisStats()

    # greedy incumbent
    best_value, best_set = 0, 0
    free = (1 << len(order)) - 1
    for v in by_weight:
        if free >> v & 1:
            best_set |= 1 << v
            best_value += w[v]
            free &= ~masks[v] & ~(1 << v)

    def search(cand: int, value: int, chosen: int) -> None:
        nonlocal best_value, best_set
        stats.nodes += 1
        isolated = 0
        for v in _bits(cand):
            if masks[v] & cand == 0:
                isolated |= 1 << v
        if isolated:
            cand &= ~isolated
            chosen |= isolated
            value += sum(w[v] for v in _bits(isolated))
        if cand == 0:
            if value > best_value or (value == best_value and _preferred(chosen, best_set)):
                best_value, best_set = value, chosen
            return
        if value + clique_cover_bound(cand, masks, by_weight, w) < best_value:
            return
        pivot = max(_bits(cand), key=lambda v: ((masks[v] & cand).bit_count(), -v))
        search(cand & ~masks[pivot] & ~(1 << pivot), value + w[pivot], chosen | (1 << pivot))
        search(cand & ~(1 << pivot), value, chosen)

    search((1 << len(order)) - 1, 0, 0)

    result = MisResult(frozenset(order[v] for v in _bits(best_set)), best_value, stats)
    verify_independent(graph, result.chosen)
    stats.wall_ms = (time.perf_counter() - start) * 1000
    logger.debug("branch and bound: |V|=%d value=%d nodes=%d", len(order), best_value, stats.nodes)
    return result
