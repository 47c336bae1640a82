"""Exact curvature index of finite simple graphs.

The index of a connected graph is the constant ``c`` for which some unit-sum
vector ``x`` solves ``D x = c 1``, with ``D`` the distance matrix. A graph is
distance exceptional when ``D x = 1`` has no solution, which happens exactly
when ``c = 0``. All arithmetic is over the rationals.
"""

from curvex.construct import algorithm1_embed, basket_jailbreak, basket_potential, egyptian_fraction, realize_rational_index
from curvex.graph import Graph, distance_matrix, family, parse_graph6, serialize_graph6
from curvex.index import (
    certificate,
    curvature_index,
    index_of,
    index_via_pseudoinverse,
    is_distance_exceptional,
    modified_index,
    spectral_cross_check,
    steinerberger_curvature,
)
from curvex.values import INFINITE, IndexValue, Potential

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "Graph",
    "IndexValue",
    "Potential",
    "algorithm1_embed",
    "basket_jailbreak",
    "basket_potential",
    "certificate",
    "curvature_index",
    "distance_matrix",
    "egyptian_fraction",
    "family",
    "index_of",
    "index_via_pseudoinverse",
    "is_distance_exceptional",
    "modified_index",
    "parse_graph6",
    "realize_rational_index",
    "serialize_graph6",
    "spectral_cross_check",
    "steinerberger_curvature",
]
