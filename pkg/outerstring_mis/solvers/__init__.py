from outerstring_mis.solvers.bounded_dp import DpKey, bounded_monotone_mis
from outerstring_mis.solvers.branch_bound import clique_cover_bound, outerstring_mwis_exact
from outerstring_mis.solvers.circle_dp import circle_mwis
from outerstring_mis.solvers.interval import interval_mwis
from outerstring_mis.solvers.separators import (
    Direction,
    SeparatorPath,
    enumerate_separators,
    separator_count,
    string_between,
    vertical_separator,
)

__all__ = [
    "Direction",
    "DpKey",
    "SeparatorPath",
    "bounded_monotone_mis",
    "circle_mwis",
    "clique_cover_bound",
    "enumerate_separators",
    "interval_mwis",
    "outerstring_mwis_exact",
    "separator_count",
    "string_between",
    "vertical_separator",
]
