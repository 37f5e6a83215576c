"""
Invariant checks for every representation; violations are returned, not raised
"""

from collections import Counter

from outerstring_mis.errors import ValidationError
from outerstring_mis.representations.models import (
    BoundedStringRep,
    CircleRep,
    GroundedSegmentRep,
    GroundedSquareLRep,
    LShapeSet,
    OuterstringRep,
    OverlapRep,
    RectangleSet,
    Representation,
)


def _check_ids(rep: Representation) -> list[str]:
    dup = [i for i, c in Counter(rep.ids()).items() if c > 1]
    violations = [f"{i}: duplicate id" for i in sorted(dup)]
    if rep.weights:
        known = set(rep.ids())
        violations += [f"{i}: weight for unknown id" for i in sorted(rep.weights) if i not in known]
    return violations


def _check_weights(rep: Representation, minimum: int) -> list[str]:
    return [f"{i}: weight {w} below {minimum}" for i, w in sorted(rep.weight_map().items()) if w < minimum]


def _check_intervals(rep: OverlapRep | GroundedSegmentRep) -> list[str]:
    violations = []
    if rep.n != len(rep.intervals):
        violations.append(f"header count {rep.n} != {len(rep.intervals)} records")
    for iv in rep.intervals:
        if not iv.lo < iv.hi:
            violations.append(f"{iv.id}: degenerate interval [{iv.lo},{iv.hi}]")
    endpoints = Counter(e for iv in rep.intervals for e in (iv.lo, iv.hi))
    for e, c in sorted(endpoints.items()):
        if c > 1:
            violations.append(f"endpoint {e} shared by {c} intervals")
    return violations


def validate(rep: Representation) -> list[str]:
    """
    Check every invariant of a representation

    Args:
        rep: Parsed representation

    Returns:
        List of violations, each naming the offending id; empty when the rep is ok
    """
    violations = _check_ids(rep)
    violations += _check_weights(rep, 1 if isinstance(rep, (LShapeSet, RectangleSet)) else 0)

    match rep:
        case CircleRep():
            if rep.n != len(rep.chords):
                violations.append(f"header count {rep.n} != {len(rep.chords)} records")
            for c in rep.chords:
                if not c.p < c.q:
                    violations.append(f"{c.id}: chord endpoints must satisfy p < q")
            positions = sorted(e for c in rep.chords for e in (c.p, c.q))
            if positions != list(range(2 * len(rep.chords))):
                violations.append("positions not a permutation of 0..2n-1")

        case GroundedSegmentRep():
            violations += _check_intervals(rep)
            for iv in rep.intervals:
                if iv.lo < 0 or iv.hi > 2 * rep.n - 1:
                    violations.append(f"{iv.id}: endpoint outside 0..2n-1")

        case OverlapRep():
            violations += _check_intervals(rep)

        case GroundedSquareLRep():
            if rep.n != len(rep.squares):
                violations.append(f"header count {rep.n} != {len(rep.squares)} records")
            for s in rep.squares:
                if s.arm <= 0:
                    violations.append(f"{s.id}: arm must be positive")
            grounds = Counter(s.ground_x for s in rep.squares)
            violations += [f"groundX {g} used {c} times" for g, c in sorted(grounds.items()) if c > 1]

        case LShapeSet():
            for s in rep.lshapes:
                if s.vlen <= 0 or s.hlen <= 0:
                    violations.append(f"{s.id}: arm lengths must be positive")

        case RectangleSet():
            for r in rep.rectangles:
                if not (r.x1 < r.x2 and r.y1 < r.y2):
                    violations.append(f"{r.id}: degenerate rectangle")

        case BoundedStringRep():
            if rep.kappa < 1:
                violations.append(f"kappa {rep.kappa} must be positive")
            violations += _check_strings(rep.strings)
            for s in rep.strings:
                if not s.is_rectilinear:
                    violations.append(f"{s.id}: not rectilinear")
                elif s.manhattan_length > rep.kappa:
                    violations.append(f"{s.id}: length bound {s.manhattan_length} > kappa {rep.kappa}")
                if not s.is_y_monotone:
                    violations.append(f"{s.id}: not y-monotone")

        case OuterstringRep():
            violations += _check_strings(rep.strings)

    return violations


def _check_strings(strings) -> list[str]:
    violations = []
    for s in strings:
        if len(s.vertices) < 2:
            violations.append(f"{s.id}: needs at least two vertices")
            continue
        if s.vertices[0].y != 0:
            violations.append(f"{s.id}: first vertex not on the grounding line")
        if any(p.y < 0 for p in s.vertices):
            violations.append(f"{s.id}: leaves the half-plane y >= 0")
        if any(a == b for a, b in zip(s.vertices, s.vertices[1:])):
            violations.append(f"{s.id}: repeated consecutive vertex")
        elif not s.is_simple():
            violations.append(f"{s.id}: self-intersecting")
    return violations


def require_valid(rep: Representation) -> Representation:
    """Raise ValidationError listing every violation; return the rep unchanged otherwise"""
    violations = validate(rep)
    if violations:
        raise ValidationError(violations)
    return rep
