"""Immutable simple graphs, the BFS metric and the three compositions.

Vertex order is part of the contract for every operation:

* ``cartesian_product(g, h)`` is row-major, vertex ``(u, v)`` gets index
  ``u * h.n + v``;
* ``join(g, h)`` and ``disjoint_union(g, h)`` list ``g`` first;
* ``coalesce(g, u, h, v)`` puts the merged vertex first, then ``V(g) - {u}``,
  then ``V(h) - {v}``, each in their original order;
* ``add_pendant(g, u)`` appends the new vertex with index ``g.n``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

import numpy as np

from curvex.errors import Disconnected, InvalidParameter, VertexOutOfRange


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; two graphs compare equal when they
    have the same order and the same labeled edge set.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidParameter(f"a graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in nbrs)
        self._hash: int | None = None

    @classmethod
    def _from_adjacency(cls, adj: Sequence[frozenset[int]]) -> Graph:
        # trusted fast path: adj must already be symmetric and loop-free
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(adj)
        g._hash = None
        return g

    @classmethod
    def from_adjacency_matrix(cls, matrix) -> Graph:
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidParameter("adjacency matrix must be square")
        if not np.array_equal(a, a.T) or np.any(np.diag(a)):
            raise InvalidParameter("adjacency matrix must be symmetric with zero diagonal")
        rows, cols = np.nonzero(np.triu(a))
        return cls(a.shape[0], zip(rows.tolist(), cols.tolist()))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def neighbors(self, u: int) -> frozenset[int]:
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        index = {}
        for i, v in enumerate(vertices):
            self._check_vertex(v)
            if v in index:
                raise InvalidParameter(f"vertex {v} listed twice")
            index[v] = i
        return Graph(
            len(vertices),
            [(index[u], index[w]) for u in vertices for w in self._adj[u] if w in index and index[u] < index[w]],
        )

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is old vertex ``order[i]``."""
        if sorted(order) != list(range(self._n)):
            raise InvalidParameter("relabel order must be a permutation of the vertices")
        return self.induced_subgraph(order)

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self._n:
            raise VertexOutOfRange(f"vertex {u} outside 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``-1``."""
    adj = g._adj
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def distance_matrix(g: Graph) -> np.ndarray:
    """Shortest-path distance matrix as an ``int64`` array."""
    rows = [bfs_distances(g, s) for s in range(g.n)]
    d = np.array(rows, dtype=np.int64)
    if (d < 0).any():
        raise Disconnected(f"graph on {g.n} vertices is not connected")
    return d


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())


def cone_distance_matrix(g: Graph) -> np.ndarray:
    """Distances among ``V(g)`` inside the cone ``g + K_1``.

    Equals ``min(D(g), 2)`` off the diagonal within a component and ``2``
    across components; ``g`` need not be connected.
    """
    d = np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64)
    d[d < 0] = 2
    return np.minimum(d, 2)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    adj = list(g._adj) + [frozenset(w + off for w in s) for s in h._adj]
    return Graph._from_adjacency(adj)


def join(g: Graph, h: Graph) -> Graph:
    """``g + h``: disjoint union plus every edge between ``V(g)`` and ``V(h)``."""
    off = g.n
    right = frozenset(range(off, off + h.n))
    left = frozenset(range(off))
    adj = [s | right for s in g._adj] + [frozenset(w + off for w in s) | left for s in h._adj]
    return Graph._from_adjacency(adj)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    hn = h.n
    adj = []
    for u in range(g.n):
        gu = g._adj[u]
        for v in range(hn):
            adj.append(frozenset([w * hn + v for w in gu] + [u * hn + w for w in h._adj[v]]))
    return Graph._from_adjacency(adj)


def coalesce_map(g: Graph, u: int) -> list[int]:
    """Where each vertex of ``g`` lands in ``coalesce(g, u, h, v)``."""
    return [0 if x == u else (x + 1 if x < u else x) for x in range(g.n)]


def coalesce(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Identify ``u`` in ``g`` with ``v`` in ``h``; the merged vertex is index 0."""
    g._check_vertex(u)
    h._check_vertex(v)
    gmap = coalesce_map(g, u)
    off = g.n - 1
    hmap = [0 if y == v else off + (y + 1 if y < v else y) for y in range(h.n)]
    adj: list[set[int]] = [set() for _ in range(g.n + h.n - 1)]
    for x in range(g.n):
        adj[gmap[x]].update(gmap[w] for w in g._adj[x])
    for y in range(h.n):
        adj[hmap[y]].update(hmap[w] for w in h._adj[y])
    return Graph._from_adjacency([frozenset(s) for s in adj])


def add_pendant(g: Graph, u: int) -> Graph:
    g._check_vertex(u)
    n = g.n
    adj = list(g._adj)
    adj[u] = adj[u] | {n}
    adj.append(frozenset([u]))
    return Graph._from_adjacency(adj)


def twin_classes(g: Graph) -> list[tuple[list[int], int]]:
    """Partition ``V(g)`` into twin classes.

    Returns ``(members, kind)`` pairs in order of first member, where ``kind``
    is the distance between two distinct members: 2 for false twins (equal
    open neighborhoods), 1 for true twins (equal closed neighborhoods) and 0
    for singletons.
    """
    false_key: dict[frozenset[int], list[int]] = {}
    true_key: dict[frozenset[int], list[int]] = {}
    for v, s in enumerate(g._adj):
        false_key.setdefault(s, []).append(v)
        true_key.setdefault(s | {v}, []).append(v)
    owner: dict[int, tuple[list[int], int]] = {}
    for members in false_key.values():
        if len(members) > 1:
            for v in members:
                owner[v] = (members, 2)
    for members in true_key.values():
        if len(members) > 1:
            for v in members:
                owner[v] = (members, 1)
    classes = []
    for v in range(g.n):
        cls = owner.get(v)
        if cls is None:
            classes.append(([v], 0))
        elif cls[0][0] == v:
            classes.append(cls)
    return classes
