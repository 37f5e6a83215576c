"""
Circle to overlap, overlap to implicit grounded segments, and the implicit encoding itself.

An interval [i, j] of a grounded segment representation denotes the segment
(i, 0)-(j, 2^j). Two denoted segments meet exactly when their intervals properly
overlap, so the representation only ever stores the interval pairs.
"""

import logging
from fractions import Fraction
from typing import Literal

import numpy as np

from outerstring_mis.config import IMPLICIT_HEADER_BITS
from outerstring_mis.errors import IncompatibleInputError, ParseError, UnknownIdError
from outerstring_mis.geometry import Interval, proper_overlap, segments_intersect
from outerstring_mis.representations.models import CircleRep, GroundedSegmentRep, OverlapRep

logger = logging.getLogger(__name__)


def circle_to_overlap(c: CircleRep) -> OverlapRep:
    """
    Cut the circle between positions 2n-1 and 0; every chord (p, q) becomes [p, q]

    Args:
        c: Validated circle representation

    Returns:
        OverlapRep with the same ids and weights
    """
    intervals = [Interval(ch.p, ch.q, ch.id) for ch in c.chords]
    return OverlapRep(c.n, intervals, weights=c.weights)


def relabel_overlap(o: OverlapRep) -> OverlapRep:
    """Order-preserving relabel of the 2n distinct endpoints to 0..2n-1"""
    if not o.intervals:
        return OverlapRep(0, [], weights=o.weights)
    lo = np.array([iv.lo for iv in o.intervals], dtype=np.int64)
    hi = np.array([iv.hi for iv in o.intervals], dtype=np.int64)
    endpoints = np.sort(np.concatenate([lo, hi]))
    new_lo = np.searchsorted(endpoints, lo)
    new_hi = np.searchsorted(endpoints, hi)
    intervals = [Interval(int(a), int(b), iv.id) for a, b, iv in zip(new_lo, new_hi, o.intervals)]
    return OverlapRep(len(intervals), intervals, weights=o.weights)


def overlap_to_grounded_segments(o: OverlapRep) -> GroundedSegmentRep:
    """
    Implicit grounded segment representation of an overlap graph

    Args:
        o: Validated overlap representation

    Returns:
        GroundedSegmentRep storing the relabeled interval pairs
    """
    relabeled = relabel_overlap(o)
    logger.debug("grounded segments for %d intervals", len(relabeled.intervals))
    return GroundedSegmentRep(relabeled.n, relabeled.intervals, weights=o.weights)


def grounded_segments_intersect(
    rep: GroundedSegmentRep, u: str, v: str, mode: Literal["implicit", "exact"] = "implicit"
) -> bool:
    """
    Adjacency of two vertices of an implicit grounded segment representation

    Args:
        rep: The representation
        u: First id
        v: Second id
        mode: "implicit" tests proper overlap of the stored intervals; "exact" intersects
            the denoted segments with integer orientation tests

    Returns:
        Whether u and v are adjacent
    """
    by_id = rep.shape_by_id()
    for key in (u, v):
        if key not in by_id:
            raise UnknownIdError(f"unknown id {key!r}")
    a, b = by_id[u], by_id[v]
    if mode == "implicit":
        return proper_overlap(a, b)
    if mode == "exact":
        return segments_intersect(GroundedSegmentRep.denoted_segment(a), GroundedSegmentRep.denoted_segment(b))
    raise ValueError(f"unknown mode {mode!r}")


def segment_height_at(interval: Interval, x: int | Fraction) -> Fraction:
    """Exact height of the denoted segment (lo,0)-(hi,2^hi) above x, for lo <= x <= hi"""
    if not interval.lo <= x <= interval.hi:
        raise ValueError(f"x={x} outside [{interval.lo},{interval.hi}]")
    return Fraction(2**interval.hi * (x - interval.lo), interval.hi - interval.lo)


def _field_width(n: int) -> int:
    """ceil(log2(2n)) bits, at least one"""
    return max(1, (2 * n - 1).bit_length())


def pack_grounded_segments(rep: GroundedSegmentRep) -> bytes:
    """
    Encode the stored intervals as fixed-width bit fields

    Layout: a 64-bit header (n and the field width, two big-endian uint32) followed by
    lo, hi of every interval in representation order, each ceil(log2(2n)) bits.
    Ids are not part of the encoding.

    Args:
        rep: Representation with endpoints in 0..2n-1

    Returns:
        Packed bytes
    """
    n = len(rep.intervals)
    width = _field_width(n)
    header = np.array([n, width], dtype=">u4").tobytes()
    values = np.array([e for iv in rep.intervals for e in (iv.lo, iv.hi)], dtype=np.uint64)
    if values.size and int(values.max()) >= 1 << width:
        raise IncompatibleInputError("endpoints must lie in 0..2n-1 before packing")
    shifts = np.arange(width - 1, -1, -1, dtype=np.uint64)
    bits = ((values[:, None] >> shifts) & np.uint64(1)).astype(np.uint8).ravel()
    return header + np.packbits(bits).tobytes()


def unpack_grounded_segments(data: bytes, ids: list[str]) -> GroundedSegmentRep:
    """
    Inverse of pack_grounded_segments

    Args:
        data: Packed bytes
        ids: Ids in representation order

    Returns:
        The decoded representation
    """
    header_bytes = IMPLICIT_HEADER_BITS // 8
    if len(data) < header_bytes:
        raise ParseError("truncated grounded segment encoding")
    n, width = (int(v) for v in np.frombuffer(data[:header_bytes], dtype=">u4"))
    if len(ids) != n:
        raise IncompatibleInputError(f"encoding holds {n} intervals, {len(ids)} ids given")
    bits = np.unpackbits(np.frombuffer(data[header_bytes:], dtype=np.uint8))
    if bits.size < 2 * n * width:
        raise ParseError("truncated grounded segment encoding")
    fields = bits[: 2 * n * width].reshape(2 * n, width).astype(np.int64)
    values = fields @ (1 << np.arange(width - 1, -1, -1, dtype=np.int64))
    intervals = [Interval(int(values[2 * k]), int(values[2 * k + 1]), ids[k]) for k in range(n)]
    return GroundedSegmentRep(n, intervals)


def implicit_size_bits(rep: GroundedSegmentRep) -> int:
    """Size of the packed payload in bits, header excluded"""
    return len(pack_grounded_segments(rep)) * 8 - IMPLICIT_HEADER_BITS
