import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from outerstring_mis.approx import (
    DivideAndConquer,
    approx_all_quadrants,
    approx_quadrant,
    approx_rectangles,
    crossing_set,
    order_shapes,
    reflect_to_upper_left,
    restricted_set,
    small_opt_exact,
    weighted_median_split,
)
from outerstring_mis.errors import IncompatibleInputError
from outerstring_mis.generate import InstanceGenerator
from outerstring_mis.geometry import Interval, LKind, LShape, Point, Rectangle
from outerstring_mis.representations.graph import brute_force_mwis, build_intersection_graph, graphs_equal
from outerstring_mis.representations.models import IntersectionGraph, LShapeSet, RectangleSet
from outerstring_mis.solvers.interval import interval_mwis


def ul(x: int, hlen: int, id: str, y: int = 10, vlen: int = 2) -> LShape:
    return LShape(LKind.UL, Point(x, y), vlen, hlen, id)


def factor(opt: int) -> float:
    return max(1.0, math.log2(opt)) if opt > 0 else 1.0


def assert_within_bound(shapes, weights, result, quadrants: int, seed: int):
    g = build_intersection_graph(shapes)
    opt = brute_force_mwis(g, weights).value
    assert g.is_independent(result.chosen)
    assert result.value == sum((weights or {}).get(id, 1) for id in result.chosen)
    assert opt / (quadrants * factor(opt)) <= result.value <= opt, seed
    if quadrants == 1 and small_opt_exact(g, shapes.ids(), weights) is not None:
        assert result.value == opt, seed


class TestOrdering:
    def test_order_and_dummy_line(self):
        order = order_shapes([ul(4, 1, "c"), ul(0, 1, "a"), ul(2, 6, "b")])
        assert order.ids == ["a", "b", "c"]
        assert order.dummy_x == 9
        assert order.line(4) == 9

    def test_ties_break_by_id(self):
        assert order_shapes([ul(3, 1, "z"), ul(3, 1, "y")]).ids == ["y", "z"]

    def test_mixed_kinds(self):
        other = LShape(LKind.LR, Point(0, 0), 1, 1, "x")
        with pytest.raises(IncompatibleInputError):
            order_shapes([ul(0, 1, "a"), other])

    def test_restricted_and_crossing_sets(self):
        order = order_shapes([ul(0, 1, "a"), ul(2, 5, "b"), ul(4, 1, "c"), ul(6, 1, "d")])
        assert restricted_set(order, 1, 3) == [1, 3]
        assert crossing_set(order, 1, 4, 3) == [2, 3]


class TestSmallOpt:
    def test_clique_takes_heaviest(self):
        g = IntersectionGraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        result = small_opt_exact(g, ["a", "b", "c"], {"a": 1, "b": 5, "c": 2})
        assert result.value == 5
        assert result.chosen == {"b"}

    def test_four_independent_shapes(self):
        g = IntersectionGraph(list("abcd"))
        assert small_opt_exact(g, list("abcd")).value == 4

    def test_five_independent_shapes(self):
        g = IntersectionGraph(list("abcde"))
        assert small_opt_exact(g, list("abcde")) is None


class TestApproximation:
    def test_single_shape(self):
        assert approx_quadrant(LShapeSet([ul(0, 1, "a")])).value == 1

    def test_disjoint_shapes(self):
        assert approx_quadrant(LShapeSet([ul(10 * k, 2, f"s{k}") for k in range(4)])).value == 4

    def test_many_disjoint_shapes(self):
        result = approx_quadrant(LShapeSet([ul(10 * k, 2, f"s{k}") for k in range(8)]))
        assert 8 / factor(8) <= result.value <= 8

    def test_other_quadrants_are_reflected(self):
        shapes = [LShape(LKind.LR, Point(10 * k, 0), 2, 2, f"s{k}") for k in range(3)]
        assert approx_quadrant(LShapeSet(shapes)).value == 3

    @pytest.mark.parametrize("weighted", [False, True])
    def test_guarantee_single_quadrant(self, weighted):
        for seed in range(300):
            rng = np.random.default_rng(seed)
            kind = list(LKind)[seed % 4]
            shapes = InstanceGenerator.lshapes(int(rng.integers(1, 15)), rng, kinds=(kind,))
            weights = InstanceGenerator.weights(shapes.ids(), rng) if weighted else None
            assert_within_bound(shapes, weights, approx_quadrant(shapes, weights), 1, seed)

    @pytest.mark.parametrize("weighted", [False, True])
    def test_guarantee_all_quadrants(self, weighted):
        for seed in range(300):
            rng = np.random.default_rng(500 + seed)
            shapes = InstanceGenerator.lshapes(int(rng.integers(1, 15)), rng, kinds=tuple(LKind))
            weights = InstanceGenerator.weights(shapes.ids(), rng) if weighted else None
            assert_within_bound(shapes, weights, approx_all_quadrants(shapes, weights), 4, seed)

    @pytest.mark.parametrize("weighted", [False, True])
    def test_guarantee_rectangles(self, weighted):
        for seed in range(300):
            rng = np.random.default_rng(900 + seed)
            rects = InstanceGenerator.rectangles(int(rng.integers(1, 15)), rng)
            weights = InstanceGenerator.weights(rects.ids(), rng) if weighted else None
            assert_within_bound(rects, weights, approx_rectangles(rects, weights), 1, seed)

    def test_stabbed_rectangles(self):
        rects = [Rectangle(0, 3 * k, 10, 3 * k + 1, f"r{k}") for k in range(6)]
        projected = interval_mwis([Interval(r.y1, r.y2, r.id) for r in rects])
        assert approx_rectangles(RectangleSet(rects)).value == projected.value == 6


class TestHelpers:
    def test_reflection_preserves_intersections(self):
        for kind in LKind:
            shapes = InstanceGenerator.lshapes(12, np.random.default_rng(3), kinds=(kind,))
            reflected = reflect_to_upper_left(shapes.lshapes)
            assert {s.kind for s in reflected} == {LKind.UL}
            assert graphs_equal(build_intersection_graph(shapes), build_intersection_graph(LShapeSet(reflected)))

    def test_median_of_unit_weights(self):
        assert weighted_median_split([1, 2, 3, 4, 5], [1, 1, 1, 1, 1]) == 3

    def test_median_of_heavy_tail(self):
        assert weighted_median_split([1, 2, 3], [1, 1, 10]) == 3

    def test_median_of_empty(self):
        with pytest.raises(ValueError):
            weighted_median_split([], [])

    def test_ties_split_at_weighted_median(self):
        rects = [Rectangle(3 * k, 0, 3 * k + 1, 1, f"r{k}") for k in range(10)]
        weights = {r.id: 1 for r in rects} | {"r9": 3}

        def crossing(run, ids):
            return interval_mwis([Interval(r.y1, r.y2, r.id) for r in rects if r.id in ids], run.weights)

        run = DivideAndConquer(rects, weights, crossing)
        assert run.run().value == 10
        assert run.table.s[(1, 10)] == (10, 6)

    @given(st.lists(st.integers(1, 50), min_size=1, max_size=30))
    def test_median_balances_weight(self, weights):
        positions = list(range(len(weights)))
        m = weighted_median_split(positions, weights)
        total = sum(weights)
        assert 2 * sum(weights[:m]) <= total
        assert 2 * sum(weights[m + 1 :]) <= total
