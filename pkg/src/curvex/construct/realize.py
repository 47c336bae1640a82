"""Graphs with a prescribed rational curvature index."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from curvex.errors import InvalidParameter
from curvex.graph.core import Graph, cartesian_product, coalesce
from curvex.graph.families import complete_multipartite, path
from curvex.graph.formats import parse_graph6
from curvex.graph.trace import ConstructionTrace, family_operand, graph_operand
from curvex.construct.egyptian import egyptian_fraction
from curvex.index.core import index_of

# K_4 + 3K_1, one of the two distance exceptional graphs on seven vertices
# (both are listed by census.enumerate_connected(7)).
SMALLEST_DX_GRAPH6 = "F~~v_"


def negative_unit_block(n: int) -> Graph:
    """``K_{1,1,2n+4}``, whose index is ``-1/n``; vertex 0 is an apex."""
    return complete_multipartite(1, 1, 2 * n + 4)


def negative_unit_operand(n: int) -> dict:
    return family_operand("complete_multipartite", 1, 1, 2 * n + 4)


@dataclass(frozen=True)
class Realization:
    graph: Graph
    trace: ConstructionTrace
    target: Fraction


def realize_rational_index(q: Fraction | int | str, method: str = "coalesce", egyptian: str = "auto", check_steps: bool = True) -> Realization:
    """Build a graph whose curvature index is exactly ``q``.

    ``q = 0`` returns a stored seven-vertex distance exceptional graph.  For
    ``q < 0`` the blocks ``K_{1,1,2n_i+4}`` for an Egyptian expansion of ``-q``
    are chained.  For ``q > 0`` the smallest integer ``m > q`` is taken and
    ``m`` copies of ``P_3`` (index 1 each) are combined with the blocks for
    ``m - q``.  ``method`` picks the combining operation: ``"coalesce"``
    (merging apex/endpoint vertex 0 each time, sizes add) or ``"product"``
    (Cartesian product, sizes multiply).  With ``check_steps`` every
    intermediate graph's index is computed exactly and stored in the trace.
    """
    q = Fraction(q)
    if method not in ("coalesce", "product"):
        raise InvalidParameter(f"method must be 'coalesce' or 'product', got {method!r}")
    trace = ConstructionTrace()
    if q == 0:
        g = parse_graph6(SMALLEST_DX_GRAPH6)
        trace.record("start", {"graph": graph_operand(g)}, _idx(g, check_steps))
        return Realization(g, trace, q)

    operands: list[tuple[dict, Graph]] = []
    if q > 0:
        m = q.numerator // q.denominator + 1
        operands += [(family_operand("path", 3), path(3))] * m
        rest = m - q
    else:
        rest = -q
    operands += [(negative_unit_operand(n), negative_unit_block(n)) for n in egyptian_fraction(rest, egyptian)]

    op0, g = operands[0]
    trace.record("start", {"graph": op0}, _idx(g, check_steps))
    for op, h in operands[1:]:
        if method == "coalesce":
            g = coalesce(g, 0, h, 0)
            trace.record("coalesce", {"u": 0, "with": op, "v": 0}, _idx(g, check_steps))
        else:
            g = cartesian_product(g, h)
            trace.record("product", {"with": op}, _idx(g, check_steps))
    return Realization(g, trace, q)


def _idx(g: Graph, check: bool) -> str | None:
    return str(index_of(g)) if check else None
