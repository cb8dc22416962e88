"""Triangle-centric social network analysis and exploration.

Builds the 3D triangle adjacency matrix of an undirected graph, reorders
nodes by recursive triangle-density clustering, and serves an explorable
scene (node-link layout + triangle cells) over HTTP.
"""

from .graph import (
    Graph,
    InfluenceScore,
    OTHER_CLUSTER,
    ParseError,
    Triangle,
    cluster_triangle_density,
    count_triangles,
    count_wedges,
    ego_network,
    enumerate_triangles,
    induced_subgraph,
    influence_score,
    parse_clusters,
    parse_edge_list,
    triangle_cluster,
    triangle_density,
)
from .layout import Layout, force_layout
from .reorder import Block, Ordering, reorder, similarity_matrix
from .trimatrix import (
    SelectionHighlight,
    Slice,
    SymTriMatrix,
    TriMatrix,
    build_matrix,
    extract_slice_view,
    layer_slice,
    reindex,
    select_node,
    symmetrize,
)

__all__ = [
    "Graph",
    "Triangle",
    "InfluenceScore",
    "OTHER_CLUSTER",
    "ParseError",
    "parse_edge_list",
    "parse_clusters",
    "enumerate_triangles",
    "count_triangles",
    "count_wedges",
    "triangle_density",
    "induced_subgraph",
    "ego_network",
    "influence_score",
    "triangle_cluster",
    "cluster_triangle_density",
    "TriMatrix",
    "SymTriMatrix",
    "Slice",
    "SelectionHighlight",
    "build_matrix",
    "symmetrize",
    "layer_slice",
    "extract_slice_view",
    "select_node",
    "reindex",
    "Block",
    "Ordering",
    "reorder",
    "similarity_matrix",
    "Layout",
    "force_layout",
]

__version__ = "0.1.0"
