# Graph Module
from .graph_core import (
    Edge,
    Graph,
    InducedSubgraph,
    Forest,
    ForestComponent,
    GraphError,
    LoopEdgeError,
    DuplicateEdgeError,
    VertexRangeError,
    ForestPathError,
    FamilyError,
    FAMILY_NAMES,
    normalize_edge,
    make_graph,
    family,
    induced_subgraph,
    canonical_spanning_forest,
    forest_path,
    all_labeled_graphs,
    all_labeled_trees,
    random_graph_corpus,
)
from .edge_list import EdgeListParseError, parse_edge_list, load_edge_list, format_edge_list

__all__ = [
    'Edge', 'Graph', 'InducedSubgraph', 'Forest', 'ForestComponent',
    'GraphError', 'LoopEdgeError', 'DuplicateEdgeError', 'VertexRangeError',
    'ForestPathError', 'FamilyError', 'EdgeListParseError', 'FAMILY_NAMES',
    'normalize_edge', 'make_graph', 'family', 'induced_subgraph',
    'canonical_spanning_forest', 'forest_path', 'all_labeled_graphs',
    'all_labeled_trees', 'random_graph_corpus',
    'parse_edge_list', 'load_edge_list', 'format_edge_list',
]
