"""Exact Wiener, Szeged and revised Szeged indices of small graphs, named
extremal families, isomorphism-free enumeration and theorem checkers."""
from __future__ import annotations

from .canon import canonical_form, canonical_key, is_isomorphic, rooted_key
from .generate import ClassSpec, enumerate_class, filter_class, gen_bicyclic, gen_connected, gen_trees, gen_unicyclic
from .graph import (
    BlockDecomposition,
    DistanceMatrix,
    Graph,
    NotConnectedError,
    all_blocks_complete,
    all_pairs_distances,
    blocks,
    coalesce,
    cyclomatic_number,
    diameter,
    eta_profile,
    from_edges,
    girth,
    is_bipartite,
    is_connected,
    transmission,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .indices import (
    EdgeSplit,
    IndexProfile,
    Rational,
    edge_split,
    index_profile,
    revised_szeged,
    revised_szeged_x4,
    sz_minus_w,
    sz_over_w,
    szeged,
    szstar_over_w,
    wiener,
    wiener_tree_edge_form,
)

__version__ = "0.1.0"
