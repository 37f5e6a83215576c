from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from outerstring_mis.config import IMPLICIT_SIZE_CONSTANT
from outerstring_mis.errors import UnknownIdError
from outerstring_mis.generate import InstanceGenerator
from outerstring_mis.geometry import Chord, Interval, SquareL
from outerstring_mis.reductions.overlap import (
    circle_to_overlap,
    grounded_segments_intersect,
    implicit_size_bits,
    overlap_to_grounded_segments,
    pack_grounded_segments,
    relabel_overlap,
    segment_height_at,
    unpack_grounded_segments,
)
from outerstring_mis.reductions.square_l import ShiftList, circle_to_square_l, overlap_to_square_l
from outerstring_mis.representations.graph import brute_force_mwis, build_intersection_graph, graphs_equal
from outerstring_mis.representations.models import CircleRep, GroundedSegmentRep, OverlapRep
from tests.strategies import overlap_reps


def overlap(*pairs) -> OverlapRep:
    return OverlapRep(len(pairs), [Interval(lo, hi, f"i{k}") for k, (lo, hi) in enumerate(pairs)])


def edges(rep) -> set[frozenset[str]]:
    return build_intersection_graph(rep).edge_set()


class TestCircleToOverlap:
    def test_single_chord(self):
        o = circle_to_overlap(CircleRep(1, [Chord(0, 1, "a")]))
        assert o.intervals == [Interval(0, 1, "a")]
        assert edges(o) == set()

    def test_crossing_chords(self):
        o = circle_to_overlap(CircleRep(2, [Chord(0, 2, "a"), Chord(1, 3, "b")]))
        assert edges(o) == {frozenset({"a", "b"})}

    def test_nested_and_crossing(self):
        c = CircleRep(3, [Chord(0, 4, "a"), Chord(1, 2, "b"), Chord(3, 5, "c")])
        assert edges(circle_to_overlap(c)) == {frozenset({"a", "c"})}


class TestGroundedSegments:
    def test_relabel(self):
        o = relabel_overlap(OverlapRep(2, [Interval(10, 40, "a"), Interval(25, 70, "b")]))
        assert o.intervals == [Interval(0, 2, "a"), Interval(1, 3, "b")]

    def test_denoted_segments_touch(self):
        rep = overlap_to_grounded_segments(overlap((0, 2), (1, 3)))
        segs = [GroundedSegmentRep.denoted_segment(iv) for iv in rep.intervals]
        assert (segs[0].b.x, segs[0].b.y) == (2, 4)
        assert (segs[1].b.x, segs[1].b.y) == (3, 8)
        assert segment_height_at(rep.intervals[1], 2) == Fraction(4)

    @pytest.mark.parametrize(
        "pairs, expected",
        [(((0, 2), (1, 3)), True), (((0, 3), (1, 2)), False), (((0, 1), (2, 3)), False)],
    )
    def test_both_modes(self, pairs, expected):
        rep = overlap_to_grounded_segments(overlap(*pairs))
        assert grounded_segments_intersect(rep, "i0", "i1", mode="implicit") is expected
        assert grounded_segments_intersect(rep, "i0", "i1", mode="exact") is expected

    def test_containment_stays_below(self):
        outer, inner = Interval(0, 3, "o"), Interval(1, 2, "i")
        for x in (1, Fraction(3, 2), 2):
            assert segment_height_at(outer, x) > segment_height_at(inner, x)

    def test_unknown_id(self):
        rep = overlap_to_grounded_segments(overlap((0, 2), (1, 3)))
        with pytest.raises(UnknownIdError):
            grounded_segments_intersect(rep, "i0", "nope")

    def test_implicit_and_exact_predicates_agree(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = int(rng.integers(2, 65))
            rep = overlap_to_grounded_segments(InstanceGenerator.overlap(n, rng))
            assert build_intersection_graph(rep).edge_set() == build_intersection_graph(rep, exact=True).edge_set()

    @pytest.mark.parametrize("n", [2**8, 2**10, 2**12])
    def test_encoding_size(self, n):
        rep = overlap_to_grounded_segments(InstanceGenerator.overlap(n, np.random.default_rng(n)))
        width = int(np.ceil(np.log2(2 * n)))
        assert implicit_size_bits(rep) <= IMPLICIT_SIZE_CONSTANT * n * width

    def test_pack_unpack(self):
        rep = overlap_to_grounded_segments(InstanceGenerator.overlap(37, np.random.default_rng(5)))
        decoded = unpack_grounded_segments(pack_grounded_segments(rep), rep.ids())
        assert decoded.intervals == rep.intervals


class TestSquareL:
    def test_single_interval(self):
        squares, shifts, _ = overlap_to_square_l(overlap((0, 1)))
        assert squares.squares == [SquareL(0, 1, "i0")]
        assert len(shifts) == 0

    def test_overlapping_pair_needs_no_shift(self):
        squares, shifts, _ = overlap_to_square_l(overlap((0, 2), (1, 3)))
        assert squares.squares == [SquareL(0, 2, "i0"), SquareL(1, 3, "i1")]
        assert len(shifts) == 0
        assert edges(squares) == {frozenset({"i0", "i1"})}

    def test_disjoint_pair_is_shifted(self):
        squares, shifts, stats = overlap_to_square_l(overlap((1, 2), (3, 4)))
        assert shifts.entries == [("i0", 2)]
        assert squares.squares == [SquareL(1, 2, "i0"), SquareL(5, 6, "i1")]
        assert edges(squares) == set()
        assert stats.queries <= 4

    def test_chain_of_disjoint_intervals(self):
        squares, shifts, _ = overlap_to_square_l(overlap((0, 1), (2, 3), (4, 5), (6, 7)))
        assert [offset for _, offset in shifts.entries] == [1, 5, 15]
        assert shifts.is_well_formed()
        assert edges(squares) == set()

    def test_negative_endpoints_are_relabeled(self):
        squares, _, _ = overlap_to_square_l(overlap((-5, 0), (-2, 3)))
        assert min(s.ground_x for s in squares.squares) >= 0
        assert edges(squares) == {frozenset({"i0", "i1"})}

    def test_shift_at(self):
        shifts = ShiftList()
        shifts.append(Interval(0, 1, "a"), 1)
        shifts.append(Interval(2, 3, "b"), 5)
        assert [shifts.shift_at(x) for x in (0, 1, 2, 3, 4)] == [0, 0, 1, 1, 5]
        assert shifts.tail_id == "b"

    @settings(max_examples=200)
    @given(overlap_reps(max_n=12))
    def test_graph_preserved(self, o):
        squares, shifts, stats = overlap_to_square_l(o, self_check=False)
        assert graphs_equal(build_intersection_graph(o), build_intersection_graph(squares))
        assert shifts.is_well_formed()
        assert stats.queries <= 2 * len(o.intervals)

    @pytest.mark.parametrize("n", [2**10, 2**11, 2**12, 2**13, 2**14])
    def test_lookup_count(self, n):
        o = InstanceGenerator.overlap(n, np.random.default_rng(n))
        _, _, stats = overlap_to_square_l(o, self_check=False)
        assert stats.queries <= 2 * n


def test_all_circle_reductions_agree():
    for seed in range(500):
        rng = np.random.default_rng(seed)
        c = InstanceGenerator.circle(int(rng.integers(1, 13)), rng)
        reference = build_intersection_graph(c)
        o = circle_to_overlap(c)
        gseg = overlap_to_grounded_segments(o)
        squares, _, _ = circle_to_square_l(c)
        for rep in (o, gseg, squares):
            assert graphs_equal(reference, build_intersection_graph(rep)), seed
        assert graphs_equal(reference, build_intersection_graph(gseg, exact=True)), seed
        assert brute_force_mwis(reference).value == brute_force_mwis(build_intersection_graph(squares)).value
