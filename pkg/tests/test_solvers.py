import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerstring_mis.generate import InstanceGenerator
from outerstring_mis.geometry import GroundedString, Interval, Point
from outerstring_mis.reductions.overlap import circle_to_overlap
from outerstring_mis.representations.graph import brute_force_mwis, build_intersection_graph
from outerstring_mis.representations.models import IntersectionGraph, OuterstringRep, OverlapRep
from outerstring_mis.solvers.branch_bound import clique_cover_bound, outerstring_mwis_exact
from outerstring_mis.solvers.circle_dp import circle_mwis
from outerstring_mis.solvers.interval import interval_mwis
from tests.strategies import lshape_sets, overlap_reps, weight_maps


def overlap(*pairs, weights=None) -> OverlapRep:
    return OverlapRep(len(pairs), [Interval(lo, hi, f"i{k}") for k, (lo, hi) in enumerate(pairs)], weights=weights)


class TestCircleDp:
    def test_single_interval(self):
        assert circle_mwis(overlap((0, 1), weights={"i0": 7})).value == 7

    def test_clique(self):
        n = 6
        assert circle_mwis(overlap(*[(i, n + i) for i in range(n)])).value == 1

    def test_laminar_family(self):
        result = circle_mwis(overlap((0, 5), (1, 2), (3, 4)))
        assert result.value == 3
        assert result.chosen == {"i0", "i1", "i2"}

    def test_empty(self):
        assert circle_mwis(OverlapRep(0, [])).value == 0

    @settings(max_examples=150)
    @given(st.data())
    def test_matches_brute_force(self, data):
        o = data.draw(overlap_reps(max_n=12))
        weights = data.draw(weight_maps(o.ids()))
        result = circle_mwis(o, weights)
        g = build_intersection_graph(o)
        assert result.value == brute_force_mwis(g, weights).value
        assert g.is_independent(result.chosen)
        assert sum(weights[v] for v in result.chosen) == result.value

    def test_seeded_instances(self):
        for seed in range(500):
            rng = np.random.default_rng(seed)
            o = circle_to_overlap(InstanceGenerator.circle(int(rng.integers(1, 13)), rng))
            weights = InstanceGenerator.weights(o.ids(), rng) if seed % 2 else None
            assert circle_mwis(o, weights).value == brute_force_mwis(build_intersection_graph(o), weights).value

    def test_large_instance(self):
        o = circle_to_overlap(InstanceGenerator.circle(2000, np.random.default_rng(0)))
        result = circle_mwis(o)
        assert result.stats.subproblems == 4000 * 4001 // 2
        assert result.stats.wall_ms < 5000
        assert build_intersection_graph(OverlapRep(len(result.chosen), [iv for iv in o.intervals if iv.id in result.chosen])).edge_set() == set()


class TestIntervalMwis:
    def test_disjoint(self):
        result = interval_mwis([Interval(0, 1, "a"), Interval(2, 3, "b"), Interval(4, 5, "c")])
        assert result.value == 3

    def test_common_point(self):
        intervals = [Interval(-k, k, f"i{k}") for k in range(1, 5)]
        assert interval_mwis(intervals, {"i1": 2, "i2": 9, "i3": 4, "i4": 1}).value == 9

    def test_weighted_schedule(self):
        intervals = [Interval(0, 3, "a"), Interval(0, 1, "b"), Interval(2, 3, "c")]
        result = interval_mwis(intervals, {"a": 5, "b": 3, "c": 3})
        assert result.value == 6
        assert result.chosen == {"b", "c"}

    def test_touching_endpoints_conflict(self):
        assert interval_mwis([Interval(0, 2, "a"), Interval(2, 4, "b")]).value == 1

    @settings(max_examples=100)
    @given(st.lists(st.tuples(st.integers(0, 30), st.integers(1, 8), st.integers(1, 9)), min_size=1, max_size=10))
    def test_matches_subset_enumeration(self, specs):
        intervals = [Interval(lo, lo + length, f"i{k}") for k, (lo, length, _) in enumerate(specs)]
        weights = {f"i{k}": w for k, (_, _, w) in enumerate(specs)}
        best = 0
        for mask in range(1 << len(intervals)):
            picked = [iv for k, iv in enumerate(intervals) if mask >> k & 1]
            if all(a.hi < b.lo or b.hi < a.lo for i, a in enumerate(picked) for b in picked[i + 1 :]):
                best = max(best, sum(weights[iv.id] for iv in picked))
        assert interval_mwis(intervals, weights).value == best


class TestBranchAndBound:
    def test_empty(self):
        assert outerstring_mwis_exact(OuterstringRep([])).value == 0

    def test_disjoint_strings(self):
        strings = [GroundedString((Point(3 * k, 0), Point(3 * k, 2), Point(3 * k + 1, 2)), f"s{k}") for k in range(6)]
        assert outerstring_mwis_exact(OuterstringRep(strings)).value == 6

    def test_clique_cover_bound_is_an_upper_bound(self):
        g = IntersectionGraph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        order, masks = g.bitmasks()
        w = [4, 1, 2, 3]
        by_weight = sorted(range(4), key=lambda v: (-w[v], v))
        assert clique_cover_bound(0b1111, masks, by_weight, w) >= 7

    def test_random_strings(self):
        rng = np.random.default_rng(10)
        for _ in range(50):
            rep = InstanceGenerator.bounded_strings(10, 3, rng).as_outerstring()
            g = build_intersection_graph(rep)
            assert outerstring_mwis_exact(rep).value == brute_force_mwis(g).value

    @settings(max_examples=100)
    @given(st.data())
    def test_matches_brute_force_on_lshapes(self, data):
        rep = data.draw(lshape_sets(max_n=12))
        weights = data.draw(weight_maps(rep.ids()))
        g = build_intersection_graph(rep)
        result = outerstring_mwis_exact(g, weights)
        assert result.value == brute_force_mwis(g, weights).value
        assert result.stats.nodes >= 1

    def test_ties_break_like_brute_force(self):
        path = IntersectionGraph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
        assert outerstring_mwis_exact(path).chosen == brute_force_mwis(path).chosen == {"a", "c"}
        rng = np.random.default_rng(12)
        for _ in range(200):
            n = int(rng.integers(1, 11))
            ids = [f"v{k}" for k in range(n)]
            edges = [(u, v) for i, u in enumerate(ids) for v in ids[i + 1 :] if rng.random() < 0.4]
            g = IntersectionGraph(ids, edges)
            weights = InstanceGenerator.weights(ids, rng, (1, 2))
            assert outerstring_mwis_exact(g, weights).chosen == brute_force_mwis(g, weights).chosen
            assert outerstring_mwis_exact(g).chosen == brute_force_mwis(g).chosen

    @pytest.mark.parametrize("n", [20, 40])
    def test_independent_on_larger_graphs(self, n):
        rep = InstanceGenerator.lshapes(n, np.random.default_rng(n))
        g = build_intersection_graph(rep)
        assert g.is_independent(outerstring_mwis_exact(rep).chosen)
