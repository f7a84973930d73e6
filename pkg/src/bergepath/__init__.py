"""Exact search, decompositions and bounds for Berge-path-free uniform hypergraphs."""

__version__ = "0.1.0"

from .berge import (
    BergePathWitness,
    SearchBudget,
    berge_vw_path,
    expand_fat_path,
    has_berge_path,
    longest_berge_path,
)
from .cliques import count_cliques, f_formula
from .constructions import construct_disjoint_blocks, construct_H_nka, construct_main
from .fat import FatnessParameters, classify_edges, decomposition_report, fat_graph, fat_hypergraph
from .hypergraph import (
    Graph,
    Hypergraph,
    VertexPair,
    connected_components,
    is_connected,
    parse_hypergraph,
    shadow_graph,
)

__all__ = [
    "BergePathWitness",
    "FatnessParameters",
    "Graph",
    "Hypergraph",
    "SearchBudget",
    "VertexPair",
    "berge_vw_path",
    "classify_edges",
    "connected_components",
    "construct_H_nka",
    "construct_disjoint_blocks",
    "construct_main",
    "count_cliques",
    "decomposition_report",
    "expand_fat_path",
    "f_formula",
    "fat_graph",
    "fat_hypergraph",
    "has_berge_path",
    "is_connected",
    "longest_berge_path",
    "parse_hypergraph",
    "shadow_graph",
]
