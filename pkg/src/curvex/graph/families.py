"""Named graph families.

``cycle(1)`` and ``cycle(2)`` collapse to ``K_1`` and ``K_2`` under simple-graph
semantics, which keeps ``torus(2, d)`` equal to the hypercube.
"""

from __future__ import annotations

from functools import reduce

from curvex.errors import InvalidParameter
from curvex.graph.core import Graph, cartesian_product, join


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


def path(k: int) -> Graph:
    _need(k >= 1, f"path needs k >= 1, got {k}")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 1, f"cycle needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(a: int) -> Graph:
    """``a`` isolated vertices."""
    _need(a >= 1, f"empty graph needs a >= 1, got {a}")
    return Graph(a)


def star(k: int) -> Graph:
    """``K_{1,k}`` with the center at vertex 0."""
    _need(k >= 1, f"star needs k >= 1, got {k}")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_multipartite(*parts: int) -> Graph:
    """Join of independent sets; part ``i`` occupies a consecutive index block."""
    _need(len(parts) >= 1, "complete multipartite graph needs at least one part")
    for a in parts:
        _need(a >= 1, f"part sizes must be >= 1, got {parts}")
    return reduce(join, (empty(a) for a in parts))


def power(g: Graph, d: int) -> Graph:
    """``g`` Cartesian-multiplied with itself ``d`` times."""
    _need(d >= 1, f"product power needs d >= 1, got {d}")
    return reduce(cartesian_product, [g] * d)


def hypercube(d: int) -> Graph:
    return power(complete(2), d)


def grid(n: int, m: int) -> Graph:
    """Rectangular lattice ``P_n x P_m``."""
    return cartesian_product(path(n), path(m))


def torus(n: int, d: int) -> Graph:
    """``C_n`` Cartesian-multiplied with itself ``d`` times."""
    _need(n >= 2, f"torus needs n >= 2, got {n}")
    return power(cycle(n), d)


def basket(k: int) -> Graph:
    """Basket graph: ``P_k`` and three ``P_{k+1}`` glued at both endpoints.

    Vertices: 0 is the first shared endpoint, ``1..k-2`` the interior of the
    short path, ``k-1`` the second shared endpoint, then the ``k-1`` interior
    vertices of each long path in turn, each listed from the vertex-0 side.
    Only ``k >= 3`` is accepted.
    """
    _need(k >= 3, f"basket graphs are supported for k >= 3, got {k}")
    left, right = 0, k - 1
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for _ in range(3):
        interior = list(range(nxt, nxt + k - 1))
        chain = [left] + interior + [right]
        edges += list(zip(chain, chain[1:]))
        nxt += k - 1
    return Graph(nxt, edges)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "complete_multipartite": complete_multipartite,
    "hypercube": hypercube,
    "grid": grid,
    "torus": torus,
    "basket": basket,
}


def family(name: str, *params: int) -> Graph:
    """Build a family member by name, e.g. ``family("grid", 5, 5)``."""
    try:
        ctor = FAMILIES[name]
    except KeyError:
        raise InvalidParameter(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise InvalidParameter(f"bad parameters for {name}: {params}") from exc
