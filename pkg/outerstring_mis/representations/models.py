"""
Representation containers, the intersection graph and solver results
"""

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import networkx as nx

from outerstring_mis.geometry import (
    Chord,
    GroundedString,
    Interval,
    LShape,
    Point,
    Rectangle,
    Segment,
    SquareL,
)


@dataclass
class _Rep:
    """Shared behaviour: every representation is a list of shapes plus optional weights"""

    weights: Optional[dict[str, int]] = field(default=None, kw_only=True)

    @property
    def shapes(self) -> Sequence:
        raise NotImplementedError

    def ids(self) -> list[str]:
        return [s.id for s in self.shapes]

    def weight_map(self) -> dict[str, int]:
        """Weights for every id, defaulting to 1"""
        given = self.weights or {}
        return {s.id: given.get(s.id, getattr(s, "weight", None) or 1) for s in self.shapes}

    def shape_by_id(self) -> dict:
        return {s.id: s for s in self.shapes}

    def __len__(self) -> int:
        return len(self.shapes)


@dataclass
class CircleRep(_Rep):
    n: int
    chords: list[Chord]

    @property
    def shapes(self) -> list[Chord]:
        return self.chords


@dataclass
class OverlapRep(_Rep):
    n: int
    intervals: list[Interval]

    @property
    def shapes(self) -> list[Interval]:
        return self.intervals


@dataclass
class GroundedSegmentRep(_Rep):
    """Implicit grounded segments: the interval [i, j] denotes the segment (i,0)-(j,2^j)"""

    n: int
    intervals: list[Interval]

    @property
    def shapes(self) -> list[Interval]:
        return self.intervals

    @staticmethod
    def denoted_segment(interval: Interval) -> Segment:
        return Segment(Point(interval.lo, 0), Point(interval.hi, 2**interval.hi))


@dataclass
class GroundedSquareLRep(_Rep):
    n: int
    squares: list[SquareL]

    @property
    def shapes(self) -> list[SquareL]:
        return self.squares


@dataclass
class LShapeSet(_Rep):
    lshapes: list[LShape]

    @property
    def shapes(self) -> list[LShape]:
        return self.lshapes


@dataclass
class RectangleSet(_Rep):
    rectangles: list[Rectangle]

    @property
    def shapes(self) -> list[Rectangle]:
        return self.rectangles


@dataclass
class OuterstringRep(_Rep):
    """Strings grounded on y=0 and contained in the upper half-plane"""

    strings: list[GroundedString]

    @property
    def shapes(self) -> list[GroundedString]:
        return self.strings


@dataclass
class BoundedStringRep(_Rep):
    """Rectilinear y-monotone integral strings of total length at most kappa"""

    strings: list[GroundedString]
    kappa: int

    @property
    def shapes(self) -> list[GroundedString]:
        return self.strings

    def as_outerstring(self) -> OuterstringRep:
        return OuterstringRep(list(self.strings), weights=self.weights)


Representation = (
    CircleRep
    | OverlapRep
    | GroundedSegmentRep
    | GroundedSquareLRep
    | LShapeSet
    | RectangleSet
    | OuterstringRep
    | BoundedStringRep
)


class IntersectionGraph:
    """Symmetric, irreflexive adjacency over shape ids"""

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        self.graph = nx.Graph()
        self.graph.add_nodes_from(vertices)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on {u}")
            self.graph.add_edge(u, v)

    @property
    def vertices(self) -> list[str]:
        return sorted(self.graph.nodes)

    def edge_set(self) -> set[frozenset[str]]:
        return {frozenset(e) for e in self.graph.edges}

    def has_edge(self, u: str, v: str) -> bool:
        return self.graph.has_edge(u, v)

    def neighbors(self, v: str) -> set[str]:
        return set(self.graph.neighbors(v))

    def degree(self, v: str) -> int:
        return self.graph.degree(v)

    def subgraph(self, vertices: Iterable[str]) -> "IntersectionGraph":
        sub = self.graph.subgraph(vertices)
        return IntersectionGraph(sub.nodes, sub.edges)

    def is_independent(self, chosen: Iterable[str]) -> bool:
        chosen = list(chosen)
        return all(v in self.graph for v in chosen) and not any(
            self.graph.has_edge(u, v) for i, u in enumerate(chosen) for v in chosen[i + 1 :]
        )

    def bitmasks(self) -> tuple[list[str], list[int]]:
        """Vertices in sorted order and each vertex's neighbourhood as a bitmask"""
        order = self.vertices
        index = {v: i for i, v in enumerate(order)}
        masks = [0] * len(order)
        for u, v in self.graph.edges:
            masks[index[u]] |= 1 << index[v]
            masks[index[v]] |= 1 << index[u]
        return order, masks

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __repr__(self) -> str:
        return f"IntersectionGraph(|V|={len(self)}, |E|={self.graph.number_of_edges()})"


@dataclass
class MisStats:
    subproblems: int = 0
    queries: int = 0
    nodes: int = 0
    wall_ms: float = 0.0


@dataclass
class MisResult:
    chosen: frozenset[str]
    value: int
    stats: MisStats = field(default_factory=MisStats)

    def sorted_ids(self) -> list[str]:
        return sorted(self.chosen)
