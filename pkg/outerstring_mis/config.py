"""
Configuration and constants for the solvers, reductions and CLI
"""

# Size guards
ORACLE_VERTEX_LIMIT = 24  # brute_force_mwis refuses larger graphs
GADGET_VARIABLE_LIMIT = 16  # 2^(n/2) blocks per side
SAT_VARIABLE_LIMIT = 24

# Implicit grounded segment encoding: size <= c * n * ceil(log2(2n)) bits
IMPLICIT_SIZE_CONSTANT = 4
IMPLICIT_HEADER_BITS = 64

# Approximation: subproblems with no independent set of this size + 1 are solved exactly
SMALL_OPT_CARDINALITY = 4

# Exit codes
EXIT_OK = 0
EXIT_DIFF = 1
EXIT_INVALID = 2
EXIT_SIZE_GUARD = 3

# Text format headers (one per representation kind)
FORMAT_HEADERS = (
    "circle",
    "overlap",
    "gseg",
    "squarel",
    "lshape",
    "rect",
    "outerstring",
    "bounded",
)

# Bench
BENCH_COLUMNS = ["kind", "n", "kappa", "seed", "op", "ms", "queries", "subproblems", "nodes"]
BENCH_SUITES = ("reductions", "circle-dp", "bounded-dp", "approx")
DEFAULT_BENCH_SIZES = {
    "reductions": [2**10, 2**11, 2**12, 2**13, 2**14],
    "circle-dp": [250, 500, 1000, 2000],
    "bounded-dp": [125, 250, 500, 1000],
    "approx": [6, 8, 10, 12, 14],
}
# Subproblem bound constant for the bounded DP: count <= c * n^2 * f(kappa)^2
BOUNDED_DP_CONSTANT = 4

# Random instance boxes (coordinates drawn uniformly inside)
LSHAPE_BOX = 20  # corners in [0, box)^2, arms in [1, box // 2]
RECT_BOX = 20
BOUNDED_GROUND_FACTOR = 2  # ground x in [0, factor * n)
BOUNDED_GROUND_RUN_RATE = 0.25  # share of strings that start along the grounding line
DEFAULT_KAPPA = 2
DEFAULT_WEIGHT_RANGE = (1, 10)

# SVG rendering
SVG_VIEWPORT = 800  # longest side in px
SVG_MARGIN = 30
SVG_THEME = {
    "background": "#ffffff",
    "ground": "#1e293b",
    "shape": "#3b82f6",
    "label": "#475569",
    "clause": "#dc2626",
    "chord": "#64748b",
}
