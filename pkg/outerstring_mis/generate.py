"""
Seeded random instance generation. The same seed and parameters always give the same instance.
"""

from typing import Optional, Sequence

import numpy as np

from outerstring_mis.config import BOUNDED_GROUND_FACTOR, BOUNDED_GROUND_RUN_RATE, DEFAULT_WEIGHT_RANGE, LSHAPE_BOX, RECT_BOX
from outerstring_mis.geometry import Chord, GroundedString, Interval, LKind, LShape, Point, Rectangle
from outerstring_mis.reductions.cnf import CnfFormula, random_ksat
from outerstring_mis.representations.models import (
    BoundedStringRep,
    CircleRep,
    LShapeSet,
    OverlapRep,
    RectangleSet,
)


def _ids(n: int) -> list[str]:
    width = len(str(max(n, 1)))
    return [f"v{i:0{width}d}" for i in range(1, n + 1)]


class InstanceGenerator:
    """
    Random models:
    - circle: uniform random perfect matching of the 2n boundary positions
    - overlap: 2n distinct endpoints drawn from 0..4n-1, paired at random
    - lshape / rect: integer corners uniform in a box, arm lengths / sides in 1..box/2
    - bounded: strings grounded at x in 0..2n-1 climbing first, then alternating
      horizontal and upward moves, total length 1..kappa; a share of them start with a
      horizontal run along the grounding line instead, some never leaving it
    - cnf: uniform random k-SAT
    """

    @staticmethod
    def circle(n: int, rng: np.random.Generator) -> CircleRep:
        positions = rng.permutation(2 * n)
        chords = [
            Chord(int(min(p, q)), int(max(p, q)), id)
            for id, p, q in zip(_ids(n), positions[0::2], positions[1::2])
        ]
        return CircleRep(n, chords)

    @staticmethod
    def overlap(n: int, rng: np.random.Generator) -> OverlapRep:
        endpoints = rng.choice(4 * n, size=2 * n, replace=False)
        intervals = [
            Interval(int(min(a, b)), int(max(a, b)), id)
            for id, a, b in zip(_ids(n), endpoints[0::2], endpoints[1::2])
        ]
        return OverlapRep(n, intervals)

    @staticmethod
    def lshapes(
        n: int, rng: np.random.Generator, kinds: Sequence[LKind] = (LKind.UL,), box: int = LSHAPE_BOX
    ) -> LShapeSet:
        corners = rng.integers(0, box, size=(n, 2))
        arms = rng.integers(1, box // 2 + 1, size=(n, 2))
        picks = rng.integers(0, len(kinds), size=n)
        shapes = [
            LShape(kinds[int(k)], Point(int(c[0]), int(c[1])), int(a[0]), int(a[1]), id)
            for id, c, a, k in zip(_ids(n), corners, arms, picks)
        ]
        return LShapeSet(shapes)

    @staticmethod
    def rectangles(n: int, rng: np.random.Generator, box: int = RECT_BOX) -> RectangleSet:
        corners = rng.integers(0, box, size=(n, 2))
        sides = rng.integers(1, box // 2 + 1, size=(n, 2))
        rects = [
            Rectangle(int(c[0]), int(c[1]), int(c[0] + s[0]), int(c[1] + s[1]), id)
            for id, c, s in zip(_ids(n), corners, sides)
        ]
        return RectangleSet(rects)

    @staticmethod
    def bounded_strings(
        n: int, kappa: int, rng: np.random.Generator, ground_runs: float = BOUNDED_GROUND_RUN_RATE
    ) -> BoundedStringRep:
        strings = []
        for id in _ids(n):
            x = int(rng.integers(0, BOUNDED_GROUND_FACTOR * n))
            y = 0
            budget = int(rng.integers(1, kappa + 1))
            vertices = [Point(x, y)]
            vertical = bool(rng.random() >= ground_runs)
            while budget > 0:
                step = int(rng.integers(1, budget + 1))
                if vertical:
                    y += step
                else:
                    x += step if rng.integers(0, 2) else -step
                vertices.append(Point(x, y))
                budget -= step
                vertical = not vertical
            strings.append(GroundedString(tuple(vertices), id))
        return BoundedStringRep(strings, kappa)

    @staticmethod
    def cnf(var_count: int, clause_count: int, k: int, rng: np.random.Generator) -> CnfFormula:
        return random_ksat(var_count, clause_count, k, rng)

    @staticmethod
    def weights(ids: Sequence[str], rng: np.random.Generator, bounds: Optional[tuple[int, int]] = None) -> dict[str, int]:
        lo, hi = bounds or DEFAULT_WEIGHT_RANGE
        values = rng.integers(lo, hi + 1, size=len(ids))
        return {id: int(w) for id, w in zip(ids, values)}
