import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from outerstring_mis.reductions.gadget import GadgetLayout
from outerstring_mis.reductions.square_l import ShiftList
from outerstring_mis.representations.models import MisStats


@dataclass
class ShiftEntry:
    """One shift list tuple: intervals ending right of `right_endpoint` move by `offset`"""

    id: str
    right_endpoint: int
    offset: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class GadgetSummary:
    """Clause points, block ground intervals and string provenance of a gadget"""

    alpha: int
    var_count: int
    clause_points: list[tuple[int, int]] = field(default_factory=list)
    block_intervals: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    strings: dict[str, dict] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "varCount": self.var_count,
            "clausePoints": [list(p) for p in self.clause_points],
            "blockIntervals": {side: [list(iv) for iv in ivs] for side, ivs in self.block_intervals.items()},
            "strings": self.strings,
        }


@dataclass
class ReductionSidecar:
    """Metadata written next to a reduced representation. Never holds timings"""

    source: str
    target: str
    n: int = 0
    queries: int = 0
    shifts: list[ShiftEntry] = field(default_factory=list)
    gadget: Optional[GadgetSummary] = None

    def to_dict(self) -> dict:
        """Convert to JSON-serializable dict"""
        d = {
            "source": self.source,
            "target": self.target,
            "n": self.n,
            "queries": self.queries,
        }
        if self.shifts:
            d["shifts"] = [s.to_dict() for s in self.shifts]
        if self.gadget is not None:
            d["gadget"] = self.gadget.to_dict()
        return d

    def to_json(self) -> str:
        """Convert to JSON string"""
        return json.dumps(self.to_dict(), indent=2)

    def save(self, filepath: str) -> None:
        with open(filepath, "w", encoding="utf-8") as f:
            f.write(self.to_json())
            f.write("\n")


def shift_sidecar(source: str, n: int, shifts: ShiftList, stats: MisStats) -> ReductionSidecar:
    """
    Sidecar of an overlap (or circle) to square-L reduction

    Args:
        source: Source format header
        n: Number of shapes
        shifts: Shift list produced by the reduction
        stats: Reduction stats; `queries` holds the lookup count

    Returns:
        ReductionSidecar listing every shift tuple
    """
    entries = [
        ShiftEntry(id, right, offset)
        for (id, offset), right in zip(shifts.entries, shifts.right_endpoints)
    ]
    return ReductionSidecar(source, "squarel", n, stats.queries, entries)


def gadget_sidecar(n: int, layout: GadgetLayout) -> ReductionSidecar:
    """Sidecar of a CNF to outerstring reduction"""
    summary = GadgetSummary(
        alpha=layout.alpha,
        var_count=layout.var_count,
        clause_points=[(p.x, p.y) for p in layout.clause_points],
        block_intervals={side: list(ivs) for side, ivs in layout.block_intervals.items()},
        strings={
            id: {"side": side, "assignment": index, "clause": clause}
            for id, (side, index, clause) in sorted(layout.string_map.items())
        },
    )
    return ReductionSidecar("cnf", "outerstring", n, gadget=summary)


def plain_sidecar(source: str, target: str, n: int) -> ReductionSidecar:
    return ReductionSidecar(source, target, n)
