import json

import numpy as np
import pytest
from hypothesis import given, settings

from outerstring_mis.errors import IncompatibleInputError, ParseError, SizeGuardError, ValidationError
from outerstring_mis.generate import InstanceGenerator
from outerstring_mis.geometry import Chord, GroundedString, Interval, Point, polyline_intersect
from outerstring_mis.reductions.cnf import CnfFormula
from outerstring_mis.reductions.gadget import cnf_to_outerstring
from outerstring_mis.reductions.square_l import overlap_to_square_l
from outerstring_mis.representations.graph import (
    brute_force_mwis,
    build_intersection_graph,
    graph_diff,
    graphs_equal,
)
from outerstring_mis.representations.loader import RepresentationLoader
from outerstring_mis.representations.models import (
    BoundedStringRep,
    CircleRep,
    IntersectionGraph,
    OuterstringRep,
    OverlapRep,
)
from outerstring_mis.representations.sidecar import gadget_sidecar, shift_sidecar
from outerstring_mis.representations.tokenizer import Header, Record, tokenize_representation
from outerstring_mis.representations.validate import require_valid, validate
from tests.strategies import circle_reps, lshape_sets, overlap_reps, rectangle_sets


def overlap(*pairs) -> OverlapRep:
    return OverlapRep(len(pairs), [Interval(lo, hi, chr(ord("A") + k)) for k, (lo, hi) in enumerate(pairs)])


class TestValidate:
    def test_duplicated_circle_position(self):
        rep = CircleRep(2, [Chord(0, 3, "a"), Chord(1, 3, "b")])
        assert any("positions not a permutation" in v for v in validate(rep))

    def test_bounded_string_too_long(self):
        s = GroundedString((Point(0, 0), Point(0, 2), Point(1, 2)), "s")
        violations = validate(BoundedStringRep([s], 2))
        assert any("length bound" in v for v in violations)

    def test_well_formed_overlap(self):
        assert validate(overlap((0, 2), (1, 3), (4, 5))) == []

    def test_shared_endpoint_and_duplicate_id(self):
        rep = OverlapRep(2, [Interval(0, 2, "a"), Interval(2, 3, "a")])
        violations = validate(rep)
        assert "a: duplicate id" in violations
        assert any("endpoint 2 shared" in v for v in violations)
        with pytest.raises(ValidationError):
            require_valid(rep)

    def test_string_below_ground(self):
        s = GroundedString((Point(0, 0), Point(0, 2), Point(1, 2), Point(1, -1)), "s")
        assert any("half-plane" in v for v in validate(OuterstringRep([s])))


class TestGraph:
    def test_overlap_edges(self):
        g = build_intersection_graph(overlap((0, 2), (1, 3), (4, 5)))
        assert g.edge_set() == {frozenset({"A", "B"})}

    def test_single_shape(self):
        assert build_intersection_graph(overlap((0, 1))).edge_set() == set()

    def test_circle_edge(self):
        g = build_intersection_graph(CircleRep(2, [Chord(0, 2, "a"), Chord(1, 3, "b")]))
        assert g.edge_set() == {frozenset({"a", "b"})}

    def test_graphs_equal_and_diff(self):
        g = IntersectionGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
        h = IntersectionGraph(["a", "b", "c"], [("a", "b")])
        assert graphs_equal(g, g)
        assert not graphs_equal(g, h)
        assert graph_diff(g, h) == [("b", "c", "first")]
        with pytest.raises(IncompatibleInputError):
            graphs_equal(g, IntersectionGraph(["a", "b"]))

    def test_overlap_vs_square_l_reduction(self):
        o = overlap((0, 2), (1, 3))
        squares, _, _ = overlap_to_square_l(o)
        assert graphs_equal(build_intersection_graph(o), build_intersection_graph(squares))

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            IntersectionGraph(["a"], [("a", "a")])

    @given(lshape_sets(max_n=10))
    def test_sweep_agrees_with_all_pairs(self, rep):
        g = build_intersection_graph(rep)
        shapes = rep.lshapes
        expected = {
            frozenset({a.id, b.id}) for i, a in enumerate(shapes) for b in shapes[i + 1 :] if polyline_intersect(a, b)
        }
        assert g.edge_set() == expected


class TestBruteForce:
    def test_empty_graph(self):
        assert brute_force_mwis(IntersectionGraph(["a", "b", "c"])).value == 3

    def test_triangle(self):
        g = IntersectionGraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        assert brute_force_mwis(g).value == 1

    def test_weighted_five_cycle(self):
        ids = ["a", "b", "c", "d", "e"]
        g = IntersectionGraph(ids, [(ids[i], ids[(i + 1) % 5]) for i in range(5)])
        result = brute_force_mwis(g, dict(zip(ids, [1, 2, 1, 2, 1])))
        assert result.value == 4
        assert result.chosen == {"b", "d"}

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            brute_force_mwis(IntersectionGraph([f"v{i}" for i in range(25)]))


class TestLoader:
    def test_tokenizer(self):
        tokens = list(tokenize_representation("# comment\nbounded 1 2\n\ns 2 0 0 0 1  # tail\n"))
        assert isinstance(tokens[0], Header)
        assert (tokens[0].kind, tokens[0].count, tokens[0].extra) == ("bounded", 1, (2,))
        assert isinstance(tokens[1], Record)
        assert tokens[1].fields == ("2", "0", "0", "0", "1")
        assert tokens[1].line_no == 4

    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "missing header"),
            ("overlap 1\na 0 x\n", "decimal integers"),
            ("rect 2\na 0 0 1 1\n", "declares 2 records"),
            ("hexagon 1\na 0 1\n", "unknown format"),
            ("lshape 1\na XX 0 0 1 1\n", "unknown L-shape kind"),
            ("outerstring 1\na 3 0 0 0 1\n", "declares 3 vertices"),
        ],
    )
    def test_parse_errors(self, text, message):
        with pytest.raises(ParseError, match=message):
            RepresentationLoader.parse(text)

    def test_parse_error_reports_line(self):
        with pytest.raises(ParseError) as info:
            RepresentationLoader.parse("overlap 1\n\na 0 x\n")
        assert info.value.line_no == 3

    def test_weights_are_optional_per_record(self):
        rep = RepresentationLoader.parse("overlap 2\na 0 2 7\nb 1 3\n")
        assert rep.weights == {"a": 7}
        assert rep.weight_map() == {"a": 7, "b": 1}
        assert RepresentationLoader.serialize(rep) == "overlap 2\na 0 2 7\nb 1 3\n"

    @settings(max_examples=50)
    @given(circle_reps())
    def test_circle_round_trip(self, rep):
        assert RepresentationLoader.parse(RepresentationLoader.serialize(rep)) == rep

    @settings(max_examples=50)
    @given(overlap_reps())
    def test_overlap_round_trip(self, rep):
        assert RepresentationLoader.parse(RepresentationLoader.serialize(rep)) == rep

    @settings(max_examples=50)
    @given(lshape_sets())
    def test_lshape_round_trip(self, rep):
        assert RepresentationLoader.parse(RepresentationLoader.serialize(rep)) == rep

    @settings(max_examples=50)
    @given(rectangle_sets())
    def test_rectangle_round_trip(self, rep):
        assert RepresentationLoader.parse(RepresentationLoader.serialize(rep)) == rep

    def test_string_round_trip(self):
        rng = np.random.default_rng(3)
        rep = InstanceGenerator.bounded_strings(6, 3, rng)
        rep.weights = InstanceGenerator.weights(rep.ids(), rng)
        assert RepresentationLoader.parse(RepresentationLoader.serialize(rep)) == rep
        outer = rep.as_outerstring()
        assert RepresentationLoader.parse(RepresentationLoader.serialize(outer)) == outer

    def test_load_weights(self, tmp_path):
        path = tmp_path / "w.txt"
        path.write_text("# weights\na 3\nb 5  # five\n")
        assert RepresentationLoader.load_weights(path) == {"a": 3, "b": 5}
        path.write_text("a 3 4\n")
        with pytest.raises(ParseError):
            RepresentationLoader.load_weights(path)


class TestSidecar:
    def test_shift_sidecar(self):
        squares, shifts, stats = overlap_to_square_l(overlap((1, 2), (3, 4)))
        d = json.loads(shift_sidecar("overlap", len(squares), shifts, stats).to_json())
        assert d["target"] == "squarel"
        assert d["shifts"] == [{"id": "A", "right_endpoint": 2, "offset": 2}]
        assert d["queries"] <= 4

    def test_gadget_sidecar(self):
        rep, layout = cnf_to_outerstring(CnfFormula(2, [(1, 2)]))
        d = gadget_sidecar(len(rep), layout).to_dict()
        assert d["gadget"]["clausePoints"] == [[0, 2 * layout.alpha + 1]]
        assert set(d["gadget"]["strings"]) == {s.id for s in rep.strings}
        assert "shifts" not in d
