"""
Scaling benchmark harness: seeded instances per (size, seed), one BenchRecord per run,
CSV output with a fixed column order
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from scipy.stats import linregress

from outerstring_mis.approx import approx_all_quadrants
from outerstring_mis.config import BENCH_COLUMNS, BENCH_SUITES, BOUNDED_DP_CONSTANT, DEFAULT_BENCH_SIZES, DEFAULT_KAPPA
from outerstring_mis.generate import InstanceGenerator
from outerstring_mis.geometry import LKind
from outerstring_mis.reductions.overlap import circle_to_overlap
from outerstring_mis.reductions.square_l import overlap_to_square_l
from outerstring_mis.solvers.bounded_dp import bounded_monotone_mis, lift_ground_runs
from outerstring_mis.solvers.circle_dp import circle_mwis
from outerstring_mis.solvers.separators import separator_count

logger = logging.getLogger(__name__)


@dataclass
class BenchRecord:
    kind: str
    n: int
    kappa: int
    seed: int
    op: str
    ms: float
    queries: int = 0
    subproblems: int = 0
    nodes: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def subproblem_bound(n: int, kappa: int) -> int:
    return BOUNDED_DP_CONSTANT * n * n * separator_count(kappa) ** 2


def run_case(suite: str, n: int, kappa: int, seed: int) -> BenchRecord:
    """
    Generate one instance and time one operation on it. Counter bounds are asserted here

    Args:
        suite: One of BENCH_SUITES
        n: Instance size
        kappa: Length bound (bounded-dp only)
        seed: Generator seed

    Returns:
        BenchRecord of the run
    """
    rng = np.random.default_rng(seed)
    match suite:
        case "reductions":
            o = InstanceGenerator.overlap(n, rng)
            start = time.perf_counter()
            _, _, stats = overlap_to_square_l(o, self_check=False)
            ms = (time.perf_counter() - start) * 1000
            if stats.queries > 2 * n:
                raise AssertionError(f"{stats.queries} lookups exceed 2n = {2 * n}")
            return BenchRecord("overlap", n, 0, seed, "overlap->squarel", ms, queries=stats.queries)
        case "circle-dp":
            o = circle_to_overlap(InstanceGenerator.circle(n, rng))
            start = time.perf_counter()
            result = circle_mwis(o)
            ms = (time.perf_counter() - start) * 1000
            return BenchRecord("circle", n, 0, seed, "circle-dp", ms, subproblems=result.stats.subproblems)
        case "bounded-dp":
            rep = InstanceGenerator.bounded_strings(n, kappa, rng)
            start = time.perf_counter()
            result = bounded_monotone_mis(rep)
            ms = (time.perf_counter() - start) * 1000
            bound = subproblem_bound(n, lift_ground_runs(rep).kappa)
            if result.stats.subproblems > bound:
                raise AssertionError(f"{result.stats.subproblems} subproblems exceed {bound}")
            return BenchRecord("bounded", n, kappa, seed, "bounded-dp", ms, subproblems=result.stats.subproblems)
        case "approx":
            shapes = InstanceGenerator.lshapes(n, rng, kinds=tuple(LKind))
            start = time.perf_counter()
            result = approx_all_quadrants(shapes)
            ms = (time.perf_counter() - start) * 1000
            return BenchRecord(
                "lshape", n, 0, seed, "approx", ms, subproblems=result.stats.subproblems, nodes=result.stats.nodes
            )
    raise ValueError(f"unknown suite: {suite}")


class BenchHarness:
    """Runs one suite over sizes x seeds, optionally on a process pool"""

    def __init__(
        self,
        suite: str,
        sizes: Optional[Sequence[int]] = None,
        seeds: Sequence[int] = (0,),
        kappa: int = DEFAULT_KAPPA,
        jobs: int = 1,
    ):
        if suite not in BENCH_SUITES:
            raise ValueError(f"unknown suite: {suite}")
        self.suite = suite
        self.sizes = sorted(sizes or DEFAULT_BENCH_SIZES[suite])
        self.seeds = list(seeds)
        self.kappa = kappa
        self.jobs = jobs

    def cases(self) -> list[tuple[str, int, int, int]]:
        return [(self.suite, n, self.kappa, seed) for n in self.sizes for seed in self.seeds]

    def run(self) -> pd.DataFrame:
        cases = self.cases()
        if self.jobs > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                records = list(pool.map(run_case, *zip(*cases)))
        else:
            records = [run_case(*case) for case in cases]
        for r in records:
            logger.debug("%s n=%d seed=%d: %.2f ms", r.op, r.n, r.seed, r.ms)
        df = pd.DataFrame([r.to_dict() for r in records], columns=BENCH_COLUMNS)
        return df.sort_values(["n", "seed"], kind="stable").reset_index(drop=True)


def write_csv(df: pd.DataFrame, filepath: str) -> None:
    df.to_csv(filepath, index=False, float_format="%.3f")


def ratio_table(df: pd.DataFrame) -> pd.DataFrame:
    """Mean time per size and the time ratio to the previous size"""
    table = df.groupby("n", as_index=False)["ms"].mean()
    table["size_ratio"] = table["n"] / table["n"].shift(1)
    table["time_ratio"] = table["ms"] / table["ms"].shift(1)
    return table


def scaling_exponent(df: pd.DataFrame) -> Optional[float]:
    """Slope of log(ms) against log(n); None with fewer than two sizes or a zero time"""
    table = df.groupby("n", as_index=False)["ms"].mean()
    if len(table) < 2 or (table["ms"] <= 0).any():
        return None
    fit = linregress(np.log(table["n"].to_numpy(dtype=float)), np.log(table["ms"].to_numpy(dtype=float)))
    slope = float(fit.slope)
    return None if math.isnan(slope) else slope
