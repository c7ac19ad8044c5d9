"""Exact degree-power extremal graph computations for small graphs."""

from .canon import canonical_form, canonical_labeling, is_isomorphic
from .counting import (
    automorphism_count,
    contains_subgraph,
    degree_power_sum,
    embedding_count,
    star_count,
    star_weights,
    subgraph_count,
)
from .graph import (
    Graph,
    GraphError,
    build_graph,
    complement,
    disjoint_union,
    empty_graph,
    join,
    parse_edge_list,
    format_edge_list,
)
from .graph6 import graph6_decode, graph6_encode, parse_graph

__version__ = "0.1.0"
