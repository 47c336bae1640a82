from curvex.graph.core import (
    Graph,
    add_pendant,
    bfs_distances,
    cartesian_product,
    coalesce,
    coalesce_map,
    cone_distance_matrix,
    connected_components,
    diameter,
    disjoint_union,
    distance_matrix,
    is_connected,
    join,
    twin_classes,
)
from curvex.graph.embedding import Embedding, find_induced_embedding
from curvex.graph.families import (
    FAMILIES,
    basket,
    complete,
    complete_multipartite,
    cycle,
    empty,
    family,
    grid,
    hypercube,
    path,
    power,
    star,
    torus,
)
from curvex.graph.formats import parse_graph6, read_graph6_lines, serialize_graph6, to_dot
from curvex.graph.trace import ConstructionTrace, Step, build_operand, family_operand, graph_operand

__all__ = [
    "FAMILIES",
    "ConstructionTrace",
    "Embedding",
    "Graph",
    "Step",
    "add_pendant",
    "basket",
    "bfs_distances",
    "build_operand",
    "cartesian_product",
    "coalesce",
    "coalesce_map",
    "complete",
    "complete_multipartite",
    "cone_distance_matrix",
    "connected_components",
    "cycle",
    "diameter",
    "disjoint_union",
    "distance_matrix",
    "empty",
    "family",
    "family_operand",
    "find_induced_embedding",
    "graph_operand",
    "grid",
    "hypercube",
    "is_connected",
    "join",
    "parse_graph6",
    "path",
    "power",
    "read_graph6_lines",
    "serialize_graph6",
    "star",
    "to_dot",
    "torus",
    "twin_classes",
]
