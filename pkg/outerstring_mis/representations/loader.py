"""
Loads and serializes the line-oriented representation formats.

Every format has a `<kind> <n>` header followed by one record per shape; the optional
trailing integer on a record is its weight. parse(serialize(r)) == r for every kind.
"""

import logging
from pathlib import Path
from typing import Callable, Optional

from outerstring_mis.config import FORMAT_HEADERS
from outerstring_mis.errors import ParseError
from outerstring_mis.geometry import Chord, GroundedString, Interval, LKind, LShape, Point, Rectangle, SquareL
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
from outerstring_mis.representations.tokenizer import Header, Record, to_ints, tokenize_representation

logger = logging.getLogger(__name__)


class RepresentationLoader:
    """Parses and serializes circle, overlap, gseg, squarel, lshape, rect, outerstring and bounded files"""

    @staticmethod
    def load(filepath: str | Path) -> Representation:
        """
        Load a representation file

        Args:
            filepath: Path to the text file

        Returns:
            The parsed representation (not yet validated)
        """
        text = Path(filepath).read_text(encoding="utf-8-sig")
        rep = RepresentationLoader.parse(text)
        logger.debug("loaded %s with %d shapes from %s", type(rep).__name__, len(rep), filepath)
        return rep

    @staticmethod
    def save(rep: Representation, filepath: str | Path) -> None:
        Path(filepath).write_text(RepresentationLoader.serialize(rep), encoding="utf-8")

    @staticmethod
    def parse(text: str) -> Representation:
        """
        Parse representation text.

        Key elements:
        - circle `id p q [w]`, overlap and gseg `id lo hi [w]`, squarel `id groundX arm [w]`
        - lshape `id kind cx cy vlen hlen [w]` with kind in UL, UR, LL, LR
        - rect `id x1 y1 x2 y2 [w]`
        - outerstring `id k x1 y1 ... xk yk [w]`; bounded has the same records and a
          `bounded n kappa` header

        Args:
            text: File contents

        Returns:
            Representation matching the header kind
        """
        tokens = tokenize_representation(text)
        header = next(tokens)
        assert isinstance(header, Header)
        records = [t for t in tokens if isinstance(t, Record)]

        parser = RepresentationLoader._PARSERS.get(header.kind)
        if parser is None:
            raise ParseError(f"unknown format {header.kind!r}; expected one of {', '.join(FORMAT_HEADERS)}", header.line_no)

        shapes, weights = [], {}
        for record in records:
            shape, weight = parser(record)
            shapes.append(shape)
            if weight is not None:
                weights[record.id] = weight

        build = RepresentationLoader._BUILDERS[header.kind]
        return build(header, shapes, weights or None)

    @staticmethod
    def _split_weight(record: Record, arity: int) -> tuple[tuple[int, ...], Optional[int]]:
        """Values of a fixed-arity record plus the optional trailing weight"""
        values = record.ints()
        if len(values) == arity:
            return values, None
        if len(values) == arity + 1:
            return values[:arity], values[arity]
        raise ParseError(f"record {record.id!r} expects {arity} values (+ optional weight), got {len(values)}", record.line_no)

    @staticmethod
    def _parse_chord(record: Record) -> tuple[Chord, Optional[int]]:
        (p, q), w = RepresentationLoader._split_weight(record, 2)
        return Chord(p, q, record.id), w

    @staticmethod
    def _parse_interval(record: Record) -> tuple[Interval, Optional[int]]:
        (lo, hi), w = RepresentationLoader._split_weight(record, 2)
        return Interval(lo, hi, record.id), w

    @staticmethod
    def _parse_square_l(record: Record) -> tuple[SquareL, Optional[int]]:
        (gx, arm), w = RepresentationLoader._split_weight(record, 2)
        return SquareL(gx, arm, record.id), w

    @staticmethod
    def _parse_lshape(record: Record) -> tuple[LShape, Optional[int]]:
        try:
            kind = LKind(record.fields[0])
        except ValueError:
            raise ParseError(f"unknown L-shape kind {record.fields[0]!r}", record.line_no) from None
        values = to_ints(record.fields[1:], record.line_no)
        if len(values) not in (4, 5):
            raise ParseError(f"record {record.id!r} expects kind cx cy vlen hlen [w]", record.line_no)
        cx, cy, vlen, hlen = values[:4]
        w = values[4] if len(values) == 5 else None
        return LShape(kind, Point(cx, cy), vlen, hlen, record.id), w

    @staticmethod
    def _parse_rectangle(record: Record) -> tuple[Rectangle, Optional[int]]:
        (x1, y1, x2, y2), w = RepresentationLoader._split_weight(record, 4)
        return Rectangle(x1, y1, x2, y2, record.id), w

    @staticmethod
    def _parse_string(record: Record) -> tuple[GroundedString, Optional[int]]:
        values = record.ints()
        k = values[0]
        coords = values[1:]
        if k < 1 or len(coords) not in (2 * k, 2 * k + 1):
            raise ParseError(f"record {record.id!r} declares {k} vertices but has {len(coords)} coordinates", record.line_no)
        w = coords[2 * k] if len(coords) == 2 * k + 1 else None
        vertices = tuple(Point(coords[2 * i], coords[2 * i + 1]) for i in range(k))
        return GroundedString(vertices, record.id), w

    @staticmethod
    def _check_count(header: Header, shapes: list) -> None:
        if header.count != len(shapes):
            raise ParseError(f"header declares {header.count} records, found {len(shapes)}", header.line_no)

    @staticmethod
    def _build_bounded(header: Header, shapes: list, weights) -> BoundedStringRep:
        RepresentationLoader._check_count(header, shapes)
        if len(header.extra) != 1:
            raise ParseError("header must be 'bounded <n> <kappa>'", header.line_no)
        return BoundedStringRep(shapes, header.extra[0], weights=weights)

    @staticmethod
    def _build_free(cls) -> Callable:
        def build(header: Header, shapes: list, weights):
            RepresentationLoader._check_count(header, shapes)
            return cls(shapes, weights=weights)

        return build

    @staticmethod
    def serialize(rep: Representation) -> str:
        """
        Render a representation in its text format

        Args:
            rep: Any representation

        Returns:
            Text that parses back to an equal representation
        """
        weights = rep.weights or {}

        match rep:
            case CircleRep():
                lines = [f"circle {rep.n}"] + [f"{c.id} {c.p} {c.q}" for c in rep.chords]
            case GroundedSegmentRep():
                lines = [f"gseg {rep.n}"] + [f"{iv.id} {iv.lo} {iv.hi}" for iv in rep.intervals]
            case OverlapRep():
                lines = [f"overlap {rep.n}"] + [f"{iv.id} {iv.lo} {iv.hi}" for iv in rep.intervals]
            case GroundedSquareLRep():
                lines = [f"squarel {rep.n}"] + [f"{s.id} {s.ground_x} {s.arm}" for s in rep.squares]
            case LShapeSet():
                lines = [f"lshape {len(rep.lshapes)}"] + [
                    f"{s.id} {s.kind.value} {s.corner.x} {s.corner.y} {s.vlen} {s.hlen}" for s in rep.lshapes
                ]
            case RectangleSet():
                lines = [f"rect {len(rep.rectangles)}"] + [
                    f"{r.id} {r.x1} {r.y1} {r.x2} {r.y2}" for r in rep.rectangles
                ]
            case BoundedStringRep():
                lines = [f"bounded {len(rep.strings)} {rep.kappa}"] + [
                    RepresentationLoader._string_record(s) for s in rep.strings
                ]
            case OuterstringRep():
                lines = [f"outerstring {len(rep.strings)}"] + [
                    RepresentationLoader._string_record(s) for s in rep.strings
                ]
            case _:
                raise TypeError(f"cannot serialize {type(rep).__name__}")

        out = [lines[0]]
        for shape, line in zip(rep.shapes, lines[1:]):
            out.append(f"{line} {weights[shape.id]}" if shape.id in weights else line)
        return "\n".join(out) + "\n"

    @staticmethod
    def _string_record(s: GroundedString) -> str:
        coords = " ".join(f"{p.x} {p.y}" for p in s.vertices)
        return f"{s.id} {len(s.vertices)} {coords}"

    @staticmethod
    def load_weights(filepath: str | Path) -> dict[str, int]:
        """
        Load a weights file: one `id w` pair per line, `#` comments ignored

        Args:
            filepath: Path to the weights file

        Returns:
            Mapping id -> weight
        """
        weights = {}
        text = Path(filepath).read_text(encoding="utf-8-sig")
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ParseError("weights lines must be '<id> <w>'", line_no)
            (w,) = to_ints(fields[1:], line_no)
            weights[fields[0]] = w
        return weights


RepresentationLoader._PARSERS = {
    "circle": RepresentationLoader._parse_chord,
    "overlap": RepresentationLoader._parse_interval,
    "gseg": RepresentationLoader._parse_interval,
    "squarel": RepresentationLoader._parse_square_l,
    "lshape": RepresentationLoader._parse_lshape,
    "rect": RepresentationLoader._parse_rectangle,
    "outerstring": RepresentationLoader._parse_string,
    "bounded": RepresentationLoader._parse_string,
}

RepresentationLoader._BUILDERS = {
    "circle": lambda h, shapes, w: CircleRep(h.count, shapes, weights=w),
    "overlap": lambda h, shapes, w: OverlapRep(h.count, shapes, weights=w),
    "gseg": lambda h, shapes, w: GroundedSegmentRep(h.count, shapes, weights=w),
    "squarel": lambda h, shapes, w: GroundedSquareLRep(h.count, shapes, weights=w),
    "lshape": RepresentationLoader._build_free(LShapeSet),
    "rect": RepresentationLoader._build_free(RectangleSet),
    "outerstring": RepresentationLoader._build_free(OuterstringRep),
    "bounded": RepresentationLoader._build_bounded,
}
