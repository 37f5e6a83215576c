from outerstring_mis.reductions.cnf import CnfFormula, dpll_satisfiable, find_assignment, parse_dimacs, random_ksat, sat_brute_force, to_dimacs
from outerstring_mis.reductions.gadget import GadgetLayout, cnf_to_outerstring, gadget_mis_equals_m
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

__all__ = [
    "CnfFormula",
    "GadgetLayout",
    "ShiftList",
    "circle_to_overlap",
    "circle_to_square_l",
    "cnf_to_outerstring",
    "dpll_satisfiable",
    "find_assignment",
    "gadget_mis_equals_m",
    "grounded_segments_intersect",
    "implicit_size_bits",
    "overlap_to_grounded_segments",
    "overlap_to_square_l",
    "pack_grounded_segments",
    "parse_dimacs",
    "random_ksat",
    "relabel_overlap",
    "sat_brute_force",
    "segment_height_at",
    "to_dimacs",
    "unpack_grounded_segments",
]
