"""Closed-form indices for graph families and the composition laws.

Everything here is arithmetic on ``IndexValue``; nothing builds a graph, so
tests can compare these predictions against direct computation.
"""

from __future__ import annotations

from fractions import Fraction

from curvex.errors import InvalidParameter
from curvex.graph.core import Graph, distance_matrix
from curvex.values import INFINITE, IndexValue

F = Fraction


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


def tree_index(n: int) -> IndexValue:
    _need(n >= 1, "a tree has at least one vertex")
    return IndexValue(F(n - 1, 2))


def cycle_index(n: int) -> IndexValue:
    _need(n >= 1, "cycle needs n >= 1")
    return IndexValue(F(n, 4) if n % 2 == 0 else F(n * n - 1, 4 * n))


def torus_index(n: int, d: int) -> IndexValue:
    _need(n >= 2 and d >= 1, "torus needs n >= 2 and d >= 1")
    return IndexValue(d * cycle_index(n).value)


def hypercube_index(d: int) -> IndexValue:
    _need(d >= 1, "hypercube needs d >= 1")
    return IndexValue(F(d, 2))


def grid_index(n: int, m: int) -> IndexValue:
    _need(n >= 1 and m >= 1, "grid needs n, m >= 1")
    return IndexValue(F(n - 1, 2) + F(m - 1, 2))


def complete_index(n: int) -> IndexValue:
    _need(n >= 1, "complete graph needs n >= 1")
    return IndexValue(F(n - 1, n))


def multipartite_index(*parts: int) -> IndexValue:
    """Index of ``K_{a_1,...,a_k}``, ``k >= 2``.

    1 if some part has size 2; otherwise ``1 + 1/S`` with
    ``S = sum(a / (a - 2))``, infinite when ``S = 0``.
    """
    _need(len(parts) >= 2 and all(a >= 1 for a in parts), f"need at least two parts of size >= 1, got {parts}")
    if 2 in parts:
        return IndexValue(F(1))
    s = sum(F(a, a - 2) for a in parts)
    if s == 0:
        return INFINITE
    return IndexValue(1 + 1 / s)


def empty_modified_index(a: int) -> IndexValue:
    """Modified index of ``a`` isolated vertices: ``2 - 2/a``."""
    _need(a >= 1, "need a >= 1")
    return IndexValue(2 - F(2, a))


def basket_index(k: int) -> IndexValue:
    _need(k >= 3, "basket formula needs k >= 3")
    return IndexValue(F((-3) ** k + 4 * k - 1, 8))


def distance_regular_index(g: Graph) -> IndexValue:
    """``2 W / n^2`` for a graph whose distance matrix has constant row sums."""
    d = distance_matrix(g)
    sums = d.sum(axis=1)
    _need(bool((sums == sums[0]).all()), "distance matrix row sums differ; formula needs a distance-regular graph")
    return IndexValue(F(int(d.sum()), g.n * g.n))


FORMULAS = {
    "tree": tree_index,
    "path": tree_index,
    "star": lambda k: tree_index(k + 1),
    "cycle": cycle_index,
    "torus": torus_index,
    "hypercube": hypercube_index,
    "grid": grid_index,
    "complete": complete_index,
    "complete_multipartite": multipartite_index,
    "basket": basket_index,
}


def family_index_formula(name: str, *params: int) -> IndexValue:
    try:
        fn = FORMULAS[name]
    except KeyError:
        raise InvalidParameter(f"no closed form for family {name!r}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise InvalidParameter(f"bad parameters for {name}: {params}") from exc


def predict_product(a: IndexValue, b: IndexValue) -> IndexValue:
    return a + b


def predict_coalesce(a: IndexValue, b: IndexValue) -> IndexValue:
    return a + b


def predict_join(mg: IndexValue, mh: IndexValue) -> IndexValue:
    """Index of ``G + H`` from the modified indices of ``G`` and ``H``."""
    if mg.is_infinite and mh.is_infinite:
        return INFINITE
    if mg.is_infinite:
        return mh
    if mh.is_infinite:
        return mg
    s, t = mg.value, mh.value
    if s == 1 and t == 1:
        return IndexValue(F(1))
    if s + t == 2:
        return INFINITE
    return IndexValue((s * t - 1) / (s + t - 2))


def join_branch(mg: IndexValue, mh: IndexValue) -> int:
    """Which of the six join cases applies (1-based, in the order of ``predict_join``'s table)."""
    if mg.is_infinite and mh.is_infinite:
        return 6
    if mg.is_infinite:
        return 4
    if mh.is_infinite:
        return 5
    if mg.value == 1 and mh.value == 1:
        return 2
    if mg.value + mh.value == 2:
        return 3
    return 1
