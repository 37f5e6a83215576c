"""
Separator paths for the bounded-string DP.

A separator starts at a ground point (q, 0), moves only up, left or right with integral
segment lengths at most kappa, alternates between horizontal and vertical segments and
climbs exactly kappa in total, so it ends on the line y = kappa with at most 2*kappa bends.

Regions are compared through profiles over the doubled heights hh = 0..2*kappa (hh odd
stands for the open band between two integral heights): R(M, hh) is the rightmost x of M
at that height.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from math import comb

import numpy as np

from outerstring_mis.geometry import GroundedString, Point

# stands in for "no point at this height" inside profile arrays
ABSENT = np.iinfo(np.int64).max // 4


class Direction(Enum):
    UP = "U"
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class SeparatorPath:
    origin: Point
    segments: tuple[tuple[Direction, int], ...]

    @property
    def height(self) -> int:
        return sum(length for d, length in self.segments if d is Direction.UP)

    @property
    def bends(self) -> int:
        return max(0, len(self.segments) - 1)

    def vertices(self) -> list[Point]:
        x, y = self.origin.x, self.origin.y
        points = [Point(x, y)]
        for d, length in self.segments:
            if d is Direction.UP:
                y += length
            else:
                x += length if d is Direction.RIGHT else -length
            points.append(Point(x, y))
        return points

    def translated(self, dx: int) -> "SeparatorPath":
        return SeparatorPath(Point(self.origin.x + dx, self.origin.y), self.segments)

    def violations(self, kappa: int) -> list[str]:
        """Every separator constraint this path breaks; empty when well formed"""
        out = []
        if self.origin.y != 0:
            out.append("origin not on the grounding line")
        if any(length < 1 or length > kappa for _, length in self.segments):
            out.append("segment length outside 1..kappa")
        for (d1, _), (d2, _) in zip(self.segments, self.segments[1:]):
            if (d1 is Direction.UP) == (d2 is Direction.UP):
                out.append("consecutive segments with the same orientation")
                break
        if self.height != kappa:
            out.append(f"climbs {self.height}, expected {kappa}")
        if self.bends > 2 * kappa:
            out.append(f"{self.bends} bends > 2*kappa")
        return out

    def profile(self, kappa: int) -> np.ndarray:
        """Rightmost x at each doubled height 0..2*kappa"""
        right = np.full(2 * kappa + 1, -ABSENT, dtype=np.int64)
        x, y = self.origin.x, 0
        for d, length in self.segments:
            if d is Direction.UP:
                band = right[2 * y : 2 * (y + length) + 1]
                np.maximum(band, x, out=band)
                y += length
            else:
                nx = x + length if d is Direction.RIGHT else x - length
                right[2 * y] = max(right[2 * y], x, nx)
                x = nx
        return right


def _compositions(total: int):
    """Ordered tuples of positive integers summing to total"""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _separator_shapes(kappa: int) -> tuple[tuple[tuple[Direction, int], ...], ...]:
    horizontals = [(d, length) for d in (Direction.LEFT, Direction.RIGHT) for length in range(1, kappa + 1)]
    optional = [None] + horizontals
    shapes = []
    for ups in _compositions(kappa):
        for head, tail in product(optional, optional):
            for inner in product(horizontals, repeat=len(ups) - 1):
                segments = [head] if head else []
                for idx, up in enumerate(ups):
                    if idx:
                        segments.append(inner[idx - 1])
                    segments.append((Direction.UP, up))
                if tail:
                    segments.append(tail)
                shapes.append(tuple(segments))
    shapes.sort(key=lambda segs: tuple((d.value, length) for d, length in segs))
    return tuple(shapes)


def enumerate_separators(q: int, kappa: int) -> list[SeparatorPath]:
    """
    All separator paths from (q, 0), canonically ordered by their segment sequence

    Args:
        q: Ground x-coordinate
        kappa: Height, per-segment length bound, and half the bend budget

    Returns:
        separator_count(kappa) paths
    """
    if kappa < 1:
        raise ValueError(f"kappa {kappa} must be positive")
    origin = Point(q, 0)
    return [SeparatorPath(origin, segs) for segs in _separator_shapes(kappa)]


def separator_count(kappa: int) -> int:
    """f(kappa): sum over p of C(kappa-1, p-1) * (2*kappa)^(p-1) * (2*kappa+1)^2"""
    return sum(comb(kappa - 1, p - 1) * (2 * kappa) ** (p - 1) for p in range(1, kappa + 1)) * (2 * kappa + 1) ** 2


@lru_cache(maxsize=None)
def separator_profiles(kappa: int) -> np.ndarray:
    """Profiles of every separator from origin 0, shape (f(kappa), 2*kappa+1); add q to translate"""
    return np.stack([path.profile(kappa) for path in enumerate_separators(0, kappa)])


def vertical_separator(x: int, kappa: int) -> SeparatorPath:
    """A straight climb, used as the outer sentinels of the DP"""
    return SeparatorPath(Point(x, 0), ((Direction.UP, kappa),))


def string_profile(s: GroundedString, kappa: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Leftmost and rightmost x of a rectilinear string at each doubled height

    Heights the string does not reach hold +ABSENT (min) and -ABSENT (max), so they never
    constrain a region test.
    """
    lo = np.full(2 * kappa + 1, ABSENT, dtype=np.int64)
    hi = np.full(2 * kappa + 1, -ABSENT, dtype=np.int64)
    for seg in s.segments():
        y0, y1 = sorted((seg.a.y, seg.b.y))
        x0, x1 = sorted((seg.a.x, seg.b.x))
        band = slice(2 * y0, 2 * y1 + 1)
        np.minimum(lo[band], x0, out=lo[band])
        np.maximum(hi[band], x1, out=hi[band])
    return lo, hi


def string_between(s: GroundedString, ma: SeparatorPath, mb: SeparatorPath) -> bool:
    """
    The string lies in the region (Ma, Mb]: strictly right of Ma and weakly left of Mb

    Args:
        s: Rectilinear integral string no taller than the separators
        ma: Left boundary (open)
        mb: Right boundary (closed)

    Returns:
        Whether every point of s lies inside the region
    """
    kappa = ma.height
    lo, hi = string_profile(s, kappa)
    return bool(np.all(lo > ma.profile(kappa)) and np.all(hi <= mb.profile(kappa)))
