from outerstring_mis.representations.graph import (
    brute_force_mwis,
    build_intersection_graph,
    graph_diff,
    graphs_equal,
    verify_independent,
)
from outerstring_mis.representations.loader import RepresentationLoader
from outerstring_mis.representations.models import (
    BoundedStringRep,
    CircleRep,
    GroundedSegmentRep,
    GroundedSquareLRep,
    IntersectionGraph,
    LShapeSet,
    MisResult,
    MisStats,
    OuterstringRep,
    OverlapRep,
    RectangleSet,
    Representation,
)
from outerstring_mis.representations.validate import require_valid, validate

__all__ = [
    "BoundedStringRep",
    "CircleRep",
    "GroundedSegmentRep",
    "GroundedSquareLRep",
    "IntersectionGraph",
    "LShapeSet",
    "MisResult",
    "MisStats",
    "OuterstringRep",
    "OverlapRep",
    "RectangleSet",
    "Representation",
    "RepresentationLoader",
    "brute_force_mwis",
    "build_intersection_graph",
    "graph_diff",
    "graphs_equal",
    "require_valid",
    "validate",
    "verify_independent",
]
