from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

import networkx as nx
import sympy
from hypothesis import strategies as st

from curvex.graph import Graph, distance_matrix
from curvex.values import INFINITE, IndexValue

DATA = Path(__file__).parent / "data"


def random_connected(rng: random.Random, n: int, density: float | None = None) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``density``."""
    density = rng.random() if density is None else density
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for v in range(1, n):
        for u in range(v):
            if (u, v) not in edges and rng.random() < density:
                edges.add((u, v))
    return Graph(n, edges)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return Graph(n, [(p, v) for v, p in enumerate(parents, start=1)] + extra)


@st.composite
def graphs(draw, max_n: int = 8) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    return Graph(n, draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else [])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def sympy_index(g: Graph) -> IndexValue:
    """Index from a plain sympy solve of the bordered system on the full matrix."""
    d = distance_matrix(g)
    n = g.n
    m = sympy.zeros(n + 1, n + 1)
    for i in range(n):
        for j in range(n):
            m[i, j] = int(d[i, j])
        m[i, n] = -1
        m[n, i] = 1
    rhs = sympy.Matrix([0] * n + [1])
    try:
        sol, params = m.gauss_jordan_solve(rhs)
    except ValueError:
        return INFINITE
    c = sol[n].subs({p: 0 for p in params})
    return IndexValue(Fraction(int(c.p), int(c.q)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
