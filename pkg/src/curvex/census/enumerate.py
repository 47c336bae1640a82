"""Isomorph-free generation of small connected graphs by vertex augmentation."""

from __future__ import annotations

from collections.abc import Iterator
from math import comb

from curvex.census.canonical import canonical_search
from curvex.errors import InvalidParameter, OrderTooLarge
from curvex.graph.core import Graph
from curvex.graph.formats import serialize_graph6

MAX_BUILTIN_ORDER = 7


def _augment(level: dict[str, Graph], k: int) -> dict[str, Graph]:
    # Every connected graph has a vertex whose removal leaves it connected
    # (a leaf of a spanning tree), so one new vertex joined to a nonempty
    # subset of a connected (k-1)-vertex graph reaches every class.
    out: dict[str, Graph] = {}
    for g in level.values():
        base = g.edges()
        for mask in range(1, 1 << (k - 1)):
            h = Graph(k, base + [(v, k - 1) for v in range(k - 1) if mask >> v & 1])
            order, _ = canonical_search(h)
            c = h.relabel(order)
            key = serialize_graph6(c)
            if key not in out:
                out[key] = c
    return out


def _connected_classes(n: int) -> dict[str, Graph]:
    level = {serialize_graph6(Graph(1)): Graph(1)}
    for k in range(2, n + 1):
        level = _augment(level, k)
    return level


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected
    ``n``-vertex graphs, in increasing graph6 order.

    Orders above seven are refused; larger censuses should scan a graph6 file
    produced by a dedicated generator.
    """
    if n < 1:
        raise InvalidParameter(f"order must be at least 1, got {n}")
    if n > MAX_BUILTIN_ORDER:
        raise OrderTooLarge(f"built-in enumeration stops at n={MAX_BUILTIN_ORDER}; scan a graph6 file for n={n}")
    classes = _connected_classes(n)
    for key in sorted(classes):
        yield classes[key]


def labeled_connected_count(n: int) -> int:
    """Number of connected labelled graphs on ``n`` vertices.

    Uses the standard recurrence that subtracts, for each size ``k`` of the
    component holding vertex 1, the graphs where that component is not
    everything.
    """
    c = [0, 1]
    for m in range(2, n + 1):
        total = 2 ** comb(m, 2)
        total -= sum(comb(m - 1, k - 1) * c[k] * 2 ** comb(m - k, 2) for k in range(1, m))
        c.append(total)
    return c[n]
