"""
SVG scenes of representations: grounding line, shapes with id labels, clause points for gadgets
"""

import math
from typing import Iterable, Optional

import drawsvg as draw

from outerstring_mis.config import SVG_MARGIN, SVG_THEME, SVG_VIEWPORT
from outerstring_mis.errors import IncompatibleInputError
from outerstring_mis.geometry import Point, Segment
from outerstring_mis.reductions.gadget import GadgetLayout
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

FONT = "DejaVu Sans, Arial, sans-serif"


class SceneRenderer:
    """Renders one representation per drawing, scaled so the longest side fits the viewport"""

    def __init__(self, theme: Optional[dict[str, str]] = None, viewport: int = SVG_VIEWPORT, margin: int = SVG_MARGIN):
        self.theme = theme or SVG_THEME
        self.viewport = viewport
        self.margin = margin

    def render(self, rep: Representation, layout: Optional[GadgetLayout] = None) -> draw.Drawing:
        match rep:
            case CircleRep():
                return self._render_circle(rep)
            case OverlapRep() | GroundedSegmentRep():
                return self._render_bars(rep)
            case GroundedSquareLRep() | LShapeSet():
                return self._render_segments([(s.id, s.segments()) for s in rep.shapes], grounded=isinstance(rep, GroundedSquareLRep))
            case RectangleSet():
                return self._render_rectangles(rep)
            case OuterstringRep() | BoundedStringRep():
                return self._render_strings(rep, layout)
        raise IncompatibleInputError(f"unrenderable format: {type(rep).__name__}")

    def save(self, rep: Representation, filepath: str, layout: Optional[GadgetLayout] = None) -> None:
        self.render(rep, layout).save_svg(filepath)

    def _frame(self, points: Iterable[Point]):
        """Drawing sized to the bounding box plus the world-to-pixel transform"""
        points = list(points) or [Point(0, 0)]
        min_x = min(p.x for p in points)
        max_x = max(p.x for p in points)
        min_y = min(p.y for p in points)
        max_y = max(p.y for p in points)
        span = max(max_x - min_x, max_y - min_y, 1)
        scale = (self.viewport - 2 * self.margin) / span
        width = (max_x - min_x) * scale + 2 * self.margin
        height = (max_y - min_y) * scale + 2 * self.margin

        def to_px(x: float, y: float) -> tuple[float, float]:
            return self.margin + (x - min_x) * scale, height - self.margin - (y - min_y) * scale

        d = draw.Drawing(width, height)
        d.append(draw.Rectangle(0, 0, width, height, fill=self.theme["background"]))
        return d, to_px, (min_x, max_x, min_y)

    def _label(self, d: draw.Drawing, text: str, x: float, y: float, fill: Optional[str] = None) -> None:
        d.append(draw.Text(text, 11, x + 3, y - 3, fill=fill or self.theme["label"], font_family=FONT))

    def _ground(self, d: draw.Drawing, to_px, min_x: float, max_x: float, y: float = 0) -> None:
        x1, y1 = to_px(min_x, y)
        x2, y2 = to_px(max_x, y)
        d.append(draw.Line(x1 - self.margin / 2, y1, x2 + self.margin / 2, y2, stroke=self.theme["ground"], stroke_width=2))

    def _render_segments(self, shapes: list[tuple[str, list[Segment]]], grounded: bool) -> draw.Drawing:
        points = [p for _, segs in shapes for s in segs for p in (s.a, s.b)]
        if grounded:
            points.append(Point(min((p.x for p in points), default=0), 0))
        d, to_px, (min_x, max_x, _) = self._frame(points)
        if grounded:
            self._ground(d, to_px, min_x, max_x)
        for id, segs in shapes:
            for s in segs:
                (x1, y1), (x2, y2) = to_px(s.a.x, s.a.y), to_px(s.b.x, s.b.y)
                d.append(draw.Line(x1, y1, x2, y2, stroke=self.theme["shape"], stroke_width=2))
            corner = segs[0].b
            self._label(d, id, *to_px(corner.x, corner.y))
        return d

    def _render_rectangles(self, rep: RectangleSet) -> draw.Drawing:
        points = [p for r in rep.rectangles for p in (Point(r.x1, r.y1), Point(r.x2, r.y2))]
        d, to_px, _ = self._frame(points)
        for r in rep.rectangles:
            x1, y1 = to_px(r.x1, r.y2)
            x2, y2 = to_px(r.x2, r.y1)
            d.append(draw.Rectangle(x1, y1, x2 - x1, y2 - y1, fill="none", stroke=self.theme["shape"], stroke_width=2))
            self._label(d, r.id, x1, y1 + 14)
        return d

    def _render_bars(self, rep: OverlapRep | GroundedSegmentRep) -> draw.Drawing:
        rows = sorted(rep.intervals, key=lambda iv: iv.lo)
        # one bar per row, rows one unit apart in world coordinates
        unit = max((iv.hi for iv in rows), default=1) / max(len(rows), 1)
        points = [Point(iv.lo, 0) for iv in rows] + [Point(iv.hi, 0) for iv in rows]
        points.append(Point(points[0].x if points else 0, int(unit * (len(rows) + 1)) + 1))
        d, to_px, (min_x, max_x, _) = self._frame(points)
        self._ground(d, to_px, min_x, max_x)
        for row, iv in enumerate(rows, start=1):
            x1, y = to_px(iv.lo, unit * row)
            x2, _ = to_px(iv.hi, unit * row)
            d.append(draw.Line(x1, y, x2, y, stroke=self.theme["shape"], stroke_width=6))
            self._label(d, iv.id, x1, y)
        return d

    def _render_circle(self, rep: CircleRep) -> draw.Drawing:
        size = self.viewport
        radius = size / 2 - self.margin
        center = size / 2
        d = draw.Drawing(size, size)
        d.append(draw.Rectangle(0, 0, size, size, fill=self.theme["background"]))
        d.append(draw.Circle(center, center, radius, fill="none", stroke=self.theme["ground"], stroke_width=2))
        positions = max(2 * rep.n, 1)

        def at(p: int) -> tuple[float, float]:
            angle = 2 * math.pi * p / positions
            return center + radius * math.sin(angle), center - radius * math.cos(angle)

        for c in rep.chords:
            (x1, y1), (x2, y2) = at(c.p), at(c.q)
            d.append(draw.Line(x1, y1, x2, y2, stroke=self.theme["chord"], stroke_width=2))
            self._label(d, c.id, (x1 + x2) / 2, (y1 + y2) / 2)
        return d

    def _render_strings(self, rep: OuterstringRep | BoundedStringRep, layout: Optional[GadgetLayout]) -> draw.Drawing:
        points = [p for s in rep.strings for p in s.vertices]
        if layout is not None:
            points += layout.clause_points
        d, to_px, (min_x, max_x, _) = self._frame(points)
        self._ground(d, to_px, min_x, max_x)
        for s in rep.strings:
            coords = [c for p in s.vertices for c in to_px(p.x, p.y)]
            d.append(draw.Lines(*coords, close=False, fill="none", stroke=self.theme["shape"], stroke_width=1.5))
            self._label(d, s.id, coords[0], coords[1])
        if layout is not None:
            for c, point in enumerate(layout.clause_points, start=1):
                x, y = to_px(point.x, point.y)
                d.append(draw.Circle(x, y, 4, fill=self.theme["clause"]))
                self._label(d, f"c{c}", x + 4, y, fill=self.theme["clause"])
        return d
