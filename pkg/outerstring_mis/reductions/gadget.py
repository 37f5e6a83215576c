"""
CNF formula to outerstring representation: maximum independent set equals the number of
clauses exactly when the formula is satisfiable.

The variables are split into two halves, A (left of x=0) and B (right, mirrored). Every
half-assignment owns a block of the grounding line; each clause it satisfies gets one
string from that block to the clause point (0, 2*alpha + c). Strings of one block are
nested and disjoint, strings of two blocks on the same side always cross, and strings
from opposite sides only meet at a shared clause point.
"""

import logging
from dataclasses import dataclass, field

from outerstring_mis.config import GADGET_VARIABLE_LIMIT
from outerstring_mis.errors import ConstructionMismatch, SizeGuardError
from outerstring_mis.geometry import GroundedString, Point
from outerstring_mis.reductions.cnf import CnfFormula
from outerstring_mis.representations.graph import build_intersection_graph
from outerstring_mis.representations.models import OuterstringRep
from outerstring_mis.solvers.branch_bound import outerstring_mwis_exact

logger = logging.getLogger(__name__)

SIDES = ("A", "B")


@dataclass
class GadgetLayout:
    alpha: int
    clause_points: list[Point]
    # side -> ground interval (lo, hi) per block, in block order
    block_intervals: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    # string id -> (side, assignment index, clause index)
    string_map: dict[str, tuple[str, int, int]] = field(default_factory=dict)
    var_count: int = 0


def _half_assignment(side: str, index: int, half: int) -> dict[int, bool]:
    first = 1 if side == "A" else half + 1
    return {first + k: bool((index >> k) & 1) for k in range(half)}


def _left_string(i: int, c: int, m: int, alpha: int) -> tuple[Point, ...]:
    """Three-bend string of block i (1-based) for clause c on the left side"""
    block_lo = -(i + 1) * (m + 1)
    start_x = block_lo + m - c
    low = alpha - i * m + c
    high = 2 * alpha + c
    return (Point(start_x, 0), Point(start_x, low), Point(-c, low), Point(-c, high), Point(0, high))


def _check_gadget(rep: OuterstringRep, layout: GadgetLayout) -> None:
    """Raise ConstructionMismatch unless every structural property of the gadget holds"""
    graph = build_intersection_graph(rep)
    strings = rep.strings
    for s in strings:
        if s.bends > 4:
            raise ConstructionMismatch(f"construction mismatch: {s.id} has {s.bends} bends")
    for k, s in enumerate(strings):
        side_s, block_s, clause_s = layout.string_map[s.id]
        for t in strings[k + 1 :]:
            side_t, block_t, clause_t = layout.string_map[t.id]
            if side_s == side_t:
                expected = block_s != block_t
            else:
                expected = clause_s == clause_t
            if graph.has_edge(s.id, t.id) != expected:
                raise ConstructionMismatch(f"construction mismatch: {s.id} vs {t.id}")


def cnf_to_outerstring(f: CnfFormula, self_check: bool = True) -> tuple[OuterstringRep, GadgetLayout]:
    """
    Build the outerstring gadget of a CNF formula

    Args:
        f: Formula with 1..GADGET_VARIABLE_LIMIT variables (padded to an even count)
        self_check: Verify the pairwise crossing structure on the built graph

    Returns:
        (OuterstringRep, GadgetLayout)
    """
    if f.var_count > GADGET_VARIABLE_LIMIT:
        raise SizeGuardError(f"too many variables: {f.var_count} > {GADGET_VARIABLE_LIMIT}")
    n = max(2, f.var_count + f.var_count % 2)
    half = n // 2
    blocks = 1 << half
    m = f.clause_count
    alpha = blocks * m + 1

    layout = GadgetLayout(alpha, [Point(0, 2 * alpha + c) for c in range(1, m + 1)], var_count=n)
    strings = []
    for side in SIDES:
        mirror = -1 if side == "B" else 1
        intervals = []
        for i in range(1, blocks + 1):
            block_lo = -(i + 1) * (m + 1)
            lo, hi = sorted((mirror * block_lo, mirror * (block_lo + m)))
            intervals.append((lo, hi))
            values = _half_assignment(side, i - 1, half)
            for c in range(1, m + 1):
                if not f.clause_satisfied(c - 1, values):
                    continue
                vertices = tuple(Point(mirror * p.x, p.y) for p in _left_string(i, c, m, alpha))
                string_id = f"{side}{i}.{c}"
                strings.append(GroundedString(vertices, string_id))
                layout.string_map[string_id] = (side, i - 1, c)
        layout.block_intervals[side] = intervals

    rep = OuterstringRep(strings)
    expected = sum(
        sum(f.clause_satisfied(c, _half_assignment(side, a, half)) for c in range(m))
        for side in SIDES
        for a in range(blocks)
    )
    if len(strings) != expected:
        raise ConstructionMismatch(f"construction mismatch: {len(strings)} strings, expected {expected}")
    if self_check:
        _check_gadget(rep, layout)
    logger.info("gadget: %d variables, %d clauses, %d strings", n, m, len(strings))
    return rep, layout


def gadget_mis_equals_m(f: CnfFormula) -> bool:
    """Whether the exact maximum independent set of the gadget has exactly m strings"""
    rep, _ = cnf_to_outerstring(f)
    return outerstring_mwis_exact(rep).value == f.clause_count
