"""Complete width of graphs and edge clique covers of their complements."""

from .fpt import KernelTrace, SolveResult, Unsolved, decide_k, fpt_cow, gk, gk_witness, kernelize
from .graph import Bipartition, Graph, GraphError, complement
from .oracle import (BicliqueCover, CliqueCover, exact_biclique_cover, exact_cow, exact_ecc,
                     verify_cover, verify_witness)
from .patterns import small_width_class
from .reductions import biclique_to_cow, cover_to_witness, witness_to_cover
from .solvers import chain_width, dispatch, pseudo_split_width, split_width, triangle_free_2k2_width

__version__ = "0.1.0"

__all__ = [
    "Graph", "Bipartition", "GraphError", "complement",
    "exact_cow", "exact_ecc", "exact_biclique_cover", "verify_witness", "verify_cover",
    "CliqueCover", "BicliqueCover",
    "kernelize", "KernelTrace", "decide_k", "fpt_cow", "gk", "gk_witness", "SolveResult", "Unsolved",
    "small_width_class",
    "chain_width", "split_width", "pseudo_split_width", "triangle_free_2k2_width", "dispatch",
    "biclique_to_cow", "cover_to_witness", "witness_to_cover",
]
