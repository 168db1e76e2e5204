"""Partial degree bounded edge packing: exact solvers, approximations,
expressibility of binary strings, reductions and a claim auditor."""

from edgepack.approx import (
    approx_p1b,
    approx_p2b_derandomized,
    approx_p2b_randomized,
    expected_left_degree,
    force_priority_edges,
    greedy_min_dominating,
)
from edgepack.audit import audit_claims
from edgepack.exact import max_meis_bruteforce, max_pcb_bruteforce, max_pcb_tree
from edgepack.generators import GenSpec, generate
from edgepack.graph import EdgeSelection, Graph, is_dominating_set, is_partial_c_bounded, is_star_forest, pcb_upper_bounds
from edgepack.reductions import graph_to_meis2, meis2_to_graph, p1b_to_pcb_gadget
from edgepack.strings import BitString, StringSet, closure, find_formula, is_expressible, is_expressible_2regular

__all__ = [
    "BitString",
    "EdgeSelection",
    "GenSpec",
    "Graph",
    "StringSet",
    "approx_p1b",
    "approx_p2b_derandomized",
    "approx_p2b_randomized",
    "audit_claims",
    "closure",
    "expected_left_degree",
    "find_formula",
    "force_priority_edges",
    "generate",
    "graph_to_meis2",
    "greedy_min_dominating",
    "is_dominating_set",
    "is_expressible",
    "is_expressible_2regular",
    "is_partial_c_bounded",
    "is_star_forest",
    "max_meis_bruteforce",
    "max_pcb_bruteforce",
    "max_pcb_tree",
    "meis2_to_graph",
    "p1b_to_pcb_gadget",
    "pcb_upper_bounds",
]
