"""Canonical labelling of small graphs.

Vertices are first split into cells by colour refinement. The colours are
isomorphism invariants, so every isomorphism maps cells onto cells of the
same colour. The canonical form is then the lexicographically smallest
upper-triangle bitstring (graph6 column order) over all relabellings that
keep the cell order fixed. Searching only those relabellings gives the same
answer as a search over all ``n!`` permutations, but much faster whenever
the refinement separates vertices.
"""

from __future__ import annotations

from itertools import permutations, product
from math import factorial

from curvex.graph.core import Graph
from curvex.graph.formats import serialize_graph6


def refine(g: Graph) -> list[list[int]]:
    """Ordered equitable partition from iterated degree refinement."""
    colour = [0] * g.n
    cells = 1
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in g.neighbors(v)))) for v in range(g.n)]
        keys = sorted(set(sig))
        rank = {s: i for i, s in enumerate(keys)}
        colour = [rank[s] for s in sig]
        if len(keys) == cells:
            break
        cells = len(keys)
    out: list[list[int]] = [[] for _ in range(cells)]
    for v in range(g.n):
        out[colour[v]].append(v)
    return out


def _bits(g: Graph, order: tuple[int, ...]) -> int:
    # order[new] = old vertex; bit string in graph6 order, first pair most significant
    word = 0
    for j in range(1, len(order)):
        nbrs = g.neighbors(order[j])
        for i in range(j):
            word = (word << 1) | (order[i] in nbrs)
    return word


def canonical_search(g: Graph) -> tuple[tuple[int, ...], int]:
    """Return ``(order, aut)``.

    ``g.relabel(order)`` is the canonical form. ``aut`` is the number of
    searched relabellings that reach it, which equals the order of the
    automorphism group.
    """
    cells = refine(g)
    best = None
    best_order: tuple[int, ...] = tuple(range(g.n))
    aut = 0
    for parts in product(*(permutations(c) for c in cells)):
        order = tuple(v for part in parts for v in part)
        word = _bits(g, order)
        if best is None or word < best:
            best, best_order, aut = word, order, 1
        elif word == best:
            aut += 1
    return best_order, aut


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling of ``g``."""
    order, _ = canonical_search(g)
    return serialize_graph6(g.relabel(order))


def automorphism_count(g: Graph) -> int:
    return canonical_search(g)[1]


def orbit_size(g: Graph) -> int:
    """Number of distinct labelled copies of ``g``: ``n! / |Aut(g)|``."""
    return factorial(g.n) // automorphism_count(g)

