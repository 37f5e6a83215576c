"""
Exact integer geometry: shapes and intersection predicates.

Every predicate works on closed point sets (touching counts as intersecting) and uses
integer arithmetic only, so coordinates may be arbitrarily large (heights 2^j in the
grounded segment verifier).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Protocol


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b

    @property
    def is_vertical(self) -> bool:
        return self.a.x == self.b.x and self.a.y != self.b.y

    @property
    def is_horizontal(self) -> bool:
        return self.a.y == self.b.y and self.a.x != self.b.x


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    id: str

    def contains(self, other: "Interval") -> bool:
        """Strict containment of the other interval"""
        return self.lo < other.lo and other.hi < self.hi


@dataclass(frozen=True)
class Chord:
    p: int  # circle position, p < q
    q: int
    id: str


class LKind(Enum):
    """Orientation of an L-shape, named after the corner position"""

    UL = "UL"  # corner top-left: vertical goes down, horizontal goes right
    UR = "UR"  # corner top-right: vertical down, horizontal left
    LL = "LL"  # corner bottom-left: vertical up, horizontal right
    LR = "LR"  # corner bottom-right: vertical up, horizontal left

    def reflected(self, flip_x: bool, flip_y: bool) -> "LKind":
        top = self in (LKind.UL, LKind.UR)
        left = self in (LKind.UL, LKind.LL)
        if flip_x:
            left = not left
        if flip_y:
            top = not top
        return {
            (True, True): LKind.UL,
            (True, False): LKind.UR,
            (False, True): LKind.LL,
            (False, False): LKind.LR,
        }[(top, left)]


class HasSegments(Protocol):
    id: str

    def segments(self) -> list[Segment]: ...


@dataclass(frozen=True)
class LShape:
    kind: LKind
    corner: Point  # the bend
    vlen: int
    hlen: int
    id: str

    @property
    def vertical_x(self) -> int:
        return self.corner.x

    @property
    def min_x(self) -> int:
        if self.kind in (LKind.UL, LKind.LL):
            return self.corner.x
        return self.corner.x - self.hlen

    @property
    def max_x(self) -> int:
        if self.kind in (LKind.UL, LKind.LL):
            return self.corner.x + self.hlen
        return self.corner.x

    def segments(self) -> list[Segment]:
        cx, cy = self.corner.x, self.corner.y
        vy = cy - self.vlen if self.kind in (LKind.UL, LKind.UR) else cy + self.vlen
        hx = cx + self.hlen if self.kind in (LKind.UL, LKind.LL) else cx - self.hlen
        return [Segment(Point(cx, vy), self.corner), Segment(self.corner, Point(hx, cy))]

    def reflect(self, flip_x: bool, flip_y: bool) -> "LShape":
        """Mirror across x=0 and/or y=0; intersection structure is preserved"""
        corner = Point(-self.corner.x if flip_x else self.corner.x, -self.corner.y if flip_y else self.corner.y)
        return LShape(self.kind.reflected(flip_x, flip_y), corner, self.vlen, self.hlen, self.id)


@dataclass(frozen=True)
class SquareL:
    """Grounded upper-left L with equal arms: (gx,0)-(gx,arm) plus (gx,arm)-(gx+arm,arm)"""

    ground_x: int
    arm: int
    id: str

    def segments(self) -> list[Segment]:
        corner = Point(self.ground_x, self.arm)
        return [
            Segment(Point(self.ground_x, 0), corner),
            Segment(corner, Point(self.ground_x + self.arm, self.arm)),
        ]


@dataclass(frozen=True)
class Rectangle:
    x1: int
    y1: int
    x2: int
    y2: int
    id: str

    @property
    def min_x(self) -> int:
        return self.x1

    @property
    def max_x(self) -> int:
        return self.x2


@dataclass(frozen=True)
class GroundedString:
    vertices: tuple[Point, ...]
    id: str
    weight: Optional[int] = field(default=None, compare=True)

    def segments(self) -> list[Segment]:
        return [Segment(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    @property
    def ground(self) -> Point:
        return self.vertices[0]

    @property
    def is_rectilinear(self) -> bool:
        return all(s.is_vertical or s.is_horizontal for s in self.segments())

    @property
    def is_y_monotone(self) -> bool:
        return all(b.y >= a.y for a, b in zip(self.vertices, self.vertices[1:]))

    @property
    def manhattan_length(self) -> int:
        return sum(abs(s.b.x - s.a.x) + abs(s.b.y - s.a.y) for s in self.segments())

    @property
    def bends(self) -> int:
        """Number of interior vertices where the direction changes"""
        count = 0
        for a, b, c in zip(self.vertices, self.vertices[1:], self.vertices[2:]):
            if orientation(a, b, c) != 0:
                count += 1
            elif (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0:
                count += 1
        return count

    def is_simple(self) -> bool:
        segs = self.segments()
        for i, s in enumerate(segs):
            if s.is_degenerate:
                return False
            for j in range(i + 1, len(segs)):
                t = segs[j]
                if j == i + 1:
                    # consecutive segments meet only at the shared vertex
                    if orientation(s.a, s.b, t.b) == 0:
                        d = (s.b.x - s.a.x) * (t.b.x - t.a.x) + (s.b.y - s.a.y) * (t.b.y - t.a.y)
                        if d < 0:
                            return False
                    continue
                if segments_intersect(s, t):
                    return False
        return True


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a)"""
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (cross > 0) - (cross < 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """p collinear with a-b is within its bounding box"""
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments share at least one point"""
    a, b, c, d = s1.a, s1.b, s2.a, s2.b
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def _bbox(segments: list[Segment]) -> tuple[int, int, int, int]:
    xs = [p.x for s in segments for p in (s.a, s.b)]
    ys = [p.y for s in segments for p in (s.a, s.b)]
    return min(xs), min(ys), max(xs), max(ys)


def polyline_intersect(p1: HasSegments, p2: HasSegments) -> bool:
    """True iff any segment of p1 meets any segment of p2"""
    segs1 = p1.segments()
    segs2 = p2.segments()
    ax1, ay1, ax2, ay2 = _bbox(segs1)
    bx1, by1, bx2, by2 = _bbox(segs2)
    if ax2 < bx1 or bx2 < ax1 or ay2 < by1 or by2 < ay1:
        return False
    return any(segments_intersect(s, t) for s in segs1 for t in segs2)


def proper_overlap(i1: Interval, i2: Interval) -> bool:
    """Intervals meet and neither contains the other"""
    return i1.lo < i2.lo < i1.hi < i2.hi or i2.lo < i1.lo < i2.hi < i1.hi


def chords_cross(c1: Chord, c2: Chord) -> bool:
    """Exactly one endpoint of c2 lies strictly inside the arc (c1.p, c1.q)"""
    inside_p = c1.p < c2.p < c1.q
    inside_q = c1.p < c2.q < c1.q
    return inside_p != inside_q


def rectangles_intersect(r1: Rectangle, r2: Rectangle) -> bool:
    return r1.x1 <= r2.x2 and r2.x1 <= r1.x2 and r1.y1 <= r2.y2 and r2.y1 <= r1.y2


def crosses_vertical_line(shape: LShape | Rectangle, x: int) -> bool:
    """True iff the shape meets the vertical line through x"""
    return shape.min_x <= x <= shape.max_x
