"""
Command-line orchestrator: generate, reduce, solve, approx, verify, render and bench
"""

import json
import logging
import math
import sys
from pathlib import Path
from typing import Optional

import numpy as np

from outerstring_mis.approx import approx_all_quadrants, approx_quadrant, approx_rectangles, small_opt_exact
from outerstring_mis.bench import BenchHarness, ratio_table, scaling_exponent, write_csv
from outerstring_mis.config import BENCH_SUITES, DEFAULT_KAPPA, EXIT_DIFF, EXIT_INVALID, EXIT_OK
from outerstring_mis.errors import IncompatibleInputError, OuterstringMisError
from outerstring_mis.generate import InstanceGenerator
from outerstring_mis.geometry import LKind
from outerstring_mis.reductions.cnf import CnfFormula, load_dimacs, to_dimacs
from outerstring_mis.reductions.gadget import GadgetLayout, cnf_to_outerstring
from outerstring_mis.reductions.overlap import circle_to_overlap, overlap_to_grounded_segments
from outerstring_mis.reductions.square_l import circle_to_square_l, overlap_to_square_l
from outerstring_mis.render import SceneRenderer
from outerstring_mis.representations.graph import brute_force_mwis, build_intersection_graph, graph_diff
from outerstring_mis.representations.loader import RepresentationLoader
from outerstring_mis.representations.models import (
    BoundedStringRep,
    CircleRep,
    GroundedSegmentRep,
    LShapeSet,
    MisResult,
    OuterstringRep,
    OverlapRep,
    RectangleSet,
    Representation,
)
from outerstring_mis.representations.sidecar import ReductionSidecar, gadget_sidecar, plain_sidecar, shift_sidecar
from outerstring_mis.representations.validate import require_valid
from outerstring_mis.solvers.bounded_dp import bounded_monotone_mis
from outerstring_mis.solvers.branch_bound import outerstring_mwis_exact
from outerstring_mis.solvers.circle_dp import circle_mwis
from outerstring_mis.solvers.interval import interval_mwis

logger = logging.getLogger(__name__)

REDUCTIONS = {
    ("circle", "overlap"),
    ("overlap", "gseg"),
    ("overlap", "squarel"),
    ("circle", "squarel"),
    ("cnf", "outerstring"),
}
ALGOS = ("brute", "circle-dp", "interval", "outerstring-exact", "bounded-dp")
GENERATE_KINDS = ("circle", "overlap", "lshape", "rect", "bounded-strings", "cnf")


def _is_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return line.split()[0] in ("c", "p")
    return False


class Workbench:
    """Runs one command per call; every method returns an exit code"""

    def __init__(self, seed: int = 0, out: Optional[str] = None, weights: Optional[str] = None):
        """
        Args:
            seed: Seed for every random choice
            out: Output path; stdout when None
            weights: Optional weights file overriding the weights stored in the input
        """
        self.seed = seed
        self.out = Path(out) if out else None
        self.weights_file = weights

    def _emit(self, text: str) -> None:
        if self.out is None:
            sys.stdout.write(text)
        else:
            self.out.write_text(text, encoding="utf-8")
            print(f"Wrote {self.out}")

    def _load(self, filepath: str) -> Representation:
        return require_valid(RepresentationLoader.load(filepath))

    def _weights(self, rep: Representation) -> dict[str, int]:
        weights = rep.weight_map()
        if self.weights_file:
            given = RepresentationLoader.load_weights(self.weights_file)
            unknown = sorted(set(given) - set(weights))
            if unknown:
                raise IncompatibleInputError(f"weights for unknown ids: {unknown[:10]}")
            weights.update(given)
        return weights

    def generate(
        self,
        kind: str,
        n: int,
        kappa: int = DEFAULT_KAPPA,
        kinds: tuple[str, ...] = ("UL",),
        var_count: int = 4,
        clause_count: int = 6,
        k: int = 3,
        weighted: bool = False,
    ) -> int:
        if n < 1:
            raise IncompatibleInputError(f"invalid params: n = {n} must be at least 1")
        rng = np.random.default_rng(self.seed)
        match kind:
            case "circle":
                rep = InstanceGenerator.circle(n, rng)
            case "overlap":
                rep = InstanceGenerator.overlap(n, rng)
            case "lshape":
                rep = InstanceGenerator.lshapes(n, rng, kinds=tuple(LKind(x) for x in kinds))
            case "rect":
                rep = InstanceGenerator.rectangles(n, rng)
            case "bounded-strings":
                rep = InstanceGenerator.bounded_strings(n, kappa, rng)
            case "cnf":
                self._emit(to_dimacs(InstanceGenerator.cnf(var_count, clause_count, k, rng)))
                return EXIT_OK
            case _:
                raise IncompatibleInputError(f"invalid params: unknown kind {kind!r}")
        if weighted:
            rep.weights = InstanceGenerator.weights(rep.ids(), rng)
        self._emit(RepresentationLoader.serialize(rep))
        return EXIT_OK

    def reduce(self, source: str, target: str, filepath: str) -> int:
        if (source, target) not in REDUCTIONS:
            raise IncompatibleInputError(f"illegal pair: {source} -> {target}")

        if source == "cnf":
            f: CnfFormula = load_dimacs(filepath)
            reduced, layout = cnf_to_outerstring(f)
            sidecar = gadget_sidecar(len(reduced), layout)
        else:
            rep = self._load(filepath)
            expected = CircleRep if source == "circle" else OverlapRep
            if type(rep) is not expected:
                raise IncompatibleInputError(f"input is {type(rep).__name__}, not {source}")
            match target:
                case "overlap":
                    reduced = circle_to_overlap(rep)
                    sidecar = plain_sidecar(source, target, len(reduced))
                case "gseg":
                    reduced = overlap_to_grounded_segments(rep)
                    sidecar = plain_sidecar(source, target, len(reduced))
                case "squarel":
                    to_square_l = circle_to_square_l if source == "circle" else overlap_to_square_l
                    reduced, shifts, stats = to_square_l(rep)
                    sidecar = shift_sidecar(source, len(reduced), shifts, stats)

        self._emit(RepresentationLoader.serialize(reduced))
        self._write_sidecar(sidecar)
        if self.out is not None:
            print(f"Reduced {source} -> {target}: {len(reduced)} shapes, {sidecar.queries} lookups")
        return EXIT_OK

    def _write_sidecar(self, sidecar: ReductionSidecar) -> None:
        if self.out is None:
            return
        path = self.out.with_name(self.out.name + ".json")
        sidecar.save(str(path))
        print(f"Wrote {path}")

    def solve(self, algo: str, filepath: str, kappa: Optional[int] = None) -> int:
        rep = self._load(filepath)
        if kappa is not None and isinstance(rep, (OuterstringRep, BoundedStringRep)):
            rep = require_valid(BoundedStringRep(list(rep.strings), kappa, weights=rep.weights))
        weights = self._weights(rep)

        match algo:
            case "brute":
                result = brute_force_mwis(build_intersection_graph(rep), weights)
            case "circle-dp":
                if isinstance(rep, CircleRep):
                    rep = circle_to_overlap(rep)
                if not isinstance(rep, OverlapRep):
                    raise IncompatibleInputError(f"circle-dp needs a circle or overlap file, got {type(rep).__name__}")
                result = circle_mwis(rep, weights)
            case "interval":
                if not isinstance(rep, (OverlapRep, GroundedSegmentRep)):
                    raise IncompatibleInputError(f"interval needs an interval file, got {type(rep).__name__}")
                result = interval_mwis(rep.intervals, weights)
            case "outerstring-exact":
                result = outerstring_mwis_exact(rep, weights)
            case "bounded-dp":
                if not isinstance(rep, BoundedStringRep):
                    raise IncompatibleInputError("bounded-dp needs a bounded file or --kappa")
                result = bounded_monotone_mis(rep)
            case _:
                raise IncompatibleInputError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGOS)}")

        self._report(algo, result)
        return EXIT_OK

    def _report(self, label: str, result: MisResult, extra: Optional[dict] = None) -> None:
        s = result.stats
        print(f"{label}: value={result.value} size={len(result.chosen)}")
        print(f"chosen: {' '.join(result.sorted_ids())}")
        print(f"stats: subproblems={s.subproblems} queries={s.queries} nodes={s.nodes} ms={s.wall_ms:.2f}")
        if self.out is not None:
            record = {
                "algo": label,
                "value": result.value,
                "chosen": result.sorted_ids(),
                "subproblems": s.subproblems,
                "queries": s.queries,
                "nodes": s.nodes,
                **(extra or {}),
            }
            self.out.write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")
            print(f"Wrote {self.out}")

    def approx(self, kind: str, filepath: str) -> int:
        rep = self._load(filepath)
        weights = self._weights(rep)
        match kind:
            case "lshape" if isinstance(rep, LShapeSet):
                single = len({s.kind for s in rep.lshapes}) <= 1
                result = approx_quadrant(rep, weights) if single else approx_all_quadrants(rep, weights)
            case "rect" if isinstance(rep, RectangleSet):
                single = True
                result = approx_rectangles(rep, weights)
            case _:
                raise IncompatibleInputError(f"invalid input: {kind} approximation of {type(rep).__name__}")

        factor = max(1.0, math.log2(result.value)) if result.value > 0 else 1.0
        if not single:
            factor *= 4
        exact = small_opt_exact(build_intersection_graph(rep), rep.ids(), weights)
        is_exact = exact is not None and exact.value == result.value
        band = "exact" if is_exact else f"OPT in [{result.value}, {result.value * factor:.2f}]"
        print(f"guarantee: {band}")
        self._report(f"approx-{kind}", result, {"exact": is_exact, "factor": factor})
        return EXIT_OK

    def verify(self, first: str, second: str) -> int:
        g1 = build_intersection_graph(self._load(first))
        g2 = build_intersection_graph(self._load(second))
        if set(g1.vertices) != set(g2.vertices):
            missing = sorted(set(g1.vertices) ^ set(g2.vertices))
            raise IncompatibleInputError(f"id mismatch: {missing[:10]}")
        diff = graph_diff(g1, g2)
        if not diff:
            print("ok")
            return EXIT_OK
        for u, v, only_in in diff:
            print(f"diff: {u} {v} edge only in {only_in}")
        return EXIT_DIFF

    def render(self, filepath: str) -> int:
        text = Path(filepath).read_text(encoding="utf-8-sig")
        layout: Optional[GadgetLayout] = None
        if _is_dimacs(text):
            rep, layout = cnf_to_outerstring(load_dimacs(filepath))
        else:
            rep = require_valid(RepresentationLoader.parse(text))
        drawing = SceneRenderer().render(rep, layout)
        if self.out is None:
            sys.stdout.write(drawing.as_svg())
        else:
            drawing.save_svg(str(self.out))
            print(f"Wrote {self.out}")
        return EXIT_OK

    def bench(
        self,
        suite: str,
        sizes: Optional[list[int]] = None,
        seeds: Optional[list[int]] = None,
        kappa: int = DEFAULT_KAPPA,
        jobs: int = 1,
    ) -> int:
        harness = BenchHarness(suite, sizes, seeds or [self.seed], kappa, jobs)
        df = harness.run()
        if self.out is None:
            sys.stdout.write(df.to_csv(index=False, float_format="%.3f"))
        else:
            write_csv(df, str(self.out))
            print(f"Wrote {len(df)} records to {self.out}")
        print(ratio_table(df).to_string(index=False, float_format=lambda x: f"{x:.3f}"))
        exponent = scaling_exponent(df)
        if exponent is not None:
            print(f"scaling exponent: {exponent:.2f}")
        return EXIT_OK


def main():
    """Command-line entry point"""
    from tap import Tap

    class CommonArgs(Tap):
        seed: int = 0  # Seed for random generation
        out: Optional[str] = None  # Output file (stdout when omitted)
        weights: Optional[str] = None  # Weights file, one `id w` per line
        verbose: bool = False  # Debug logging

    class GenerateArgs(CommonArgs):
        """Random models: circle = uniform perfect matching of 2n positions; overlap = 2n distinct
        endpoints from 0..4n-1; lshape/rect = integer corners in a 20x20 box; bounded-strings =
        monotone rectilinear strings of length <= kappa; cnf = uniform random k-SAT"""

        kind: str  # One of circle, overlap, lshape, rect, bounded-strings, cnf
        n: int = 8  # Number of shapes
        kappa: int = DEFAULT_KAPPA  # Length bound for bounded-strings
        kinds: list[str] = ["UL"]  # L-shape kinds to draw from (UL, UR, LL, LR)
        vars: int = 4  # CNF variable count
        clauses: int = 6  # CNF clause count
        k: int = 3  # CNF clause width
        weighted: bool = False  # Attach random weights in 1..10

        def configure(self):
            self.add_argument("kind", choices=GENERATE_KINDS)

    class ReduceArgs(CommonArgs):
        source: str  # Input format
        target: str  # Output format
        input: str  # Input file (DIMACS for cnf)

        def configure(self):
            self.add_argument("source", choices=("circle", "overlap", "cnf"))
            self.add_argument("target", choices=("overlap", "gseg", "squarel", "outerstring"))
            self.add_argument("input")

    class SolveArgs(CommonArgs):
        input: str  # Representation file
        algo: str = "outerstring-exact"  # One of brute, circle-dp, interval, outerstring-exact, bounded-dp
        kappa: Optional[int] = None  # Treat strings as bounded with this kappa

        def configure(self):
            self.add_argument("input")
            self.add_argument("--algo", choices=ALGOS)

    class ApproxArgs(CommonArgs):
        kind: str  # lshape or rect
        input: str  # Representation file

        def configure(self):
            self.add_argument("kind", choices=("lshape", "rect"))
            self.add_argument("input")

    class VerifyArgs(CommonArgs):
        first: str  # First representation file
        second: str  # Second representation file

        def configure(self):
            self.add_argument("first")
            self.add_argument("second")

    class RenderArgs(CommonArgs):
        input: str  # Representation or DIMACS file

        def configure(self):
            self.add_argument("input")

    class BenchArgs(CommonArgs):
        suite: str  # One of reductions, circle-dp, bounded-dp, approx
        sizes: Optional[list[int]] = None  # Instance sizes (suite defaults when omitted)
        seeds: Optional[list[int]] = None  # Seeds per size (defaults to --seed)
        kappa: int = DEFAULT_KAPPA  # Length bound for bounded-dp
        jobs: int = 1  # Worker processes

        def configure(self):
            self.add_argument("suite", choices=BENCH_SUITES)

    class Args(Tap):
        def configure(self):
            self.add_subparsers(dest="command", required=True)
            self.add_subparser("generate", GenerateArgs, help="Generate a seeded random instance")
            self.add_subparser("reduce", ReduceArgs, help="Reduce between representations")
            self.add_subparser("solve", SolveArgs, help="Solve MIS exactly")
            self.add_subparser("approx", ApproxArgs, help="Approximate MIS of L-shapes or rectangles")
            self.add_subparser("verify", VerifyArgs, help="Compare two intersection graphs")
            self.add_subparser("render", RenderArgs, help="Render a representation to SVG")
            self.add_subparser("bench", BenchArgs, help="Run a scaling benchmark suite")

    args = Args().parse_args()
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)  # type: ignore

    bench = Workbench(args.seed, args.out, args.weights)  # type: ignore
    try:
        match args.command:  # type: ignore
            case "generate":
                return bench.generate(
                    args.kind, args.n, args.kappa, tuple(args.kinds),  # type: ignore
                    args.vars, args.clauses, args.k, args.weighted,  # type: ignore
                )
            case "reduce":
                return bench.reduce(args.source, args.target, args.input)  # type: ignore
            case "solve":
                return bench.solve(args.algo, args.input, args.kappa)  # type: ignore
            case "approx":
                return bench.approx(args.kind, args.input)  # type: ignore
            case "verify":
                return bench.verify(args.first, args.second)  # type: ignore
            case "render":
                return bench.render(args.input)  # type: ignore
            case "bench":
                return bench.bench(args.suite, args.sizes, args.seeds, args.kappa, args.jobs)  # type: ignore
    except OuterstringMisError as e:
        print(f"Error: {e}")
        return e.exit_code
    except FileNotFoundError as e:
        print(f"Error: file not found: {e.filename}")
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
