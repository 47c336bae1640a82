"""Embedding an arbitrary graph into a distance exceptional supergraph.

1. If the input is disconnected or has infinite index, join it with two
   isolated vertices (the join with ``2K_1`` always has index 1).
2. While the index is negative, coalesce a ``K_2`` (index +1/2).
3. Expand the remaining positive index as a sum of unit fractions ``1/n_i``
   and coalesce one ``K_{1,1,2n_i+4}`` (index ``-1/n_i``) per term.

Coalescing keeps the current graph isometrically embedded, so only step 1
can break isometry.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass

from curvex.errors import InvalidParameter
from curvex.graph.core import Graph, coalesce, coalesce_map, is_connected, join
from curvex.graph.embedding import Embedding, find_induced_embedding
from curvex.graph.families import complete, empty
from curvex.graph.trace import ConstructionTrace, family_operand, graph_operand
from curvex.construct.egyptian import egyptian_fraction
from curvex.construct.realize import negative_unit_block, negative_unit_operand
from curvex.index.core import index_of
from curvex.values import IndexValue

MergePolicy = str | Callable[[Graph], int]


@dataclass(frozen=True)
class EmbedResult:
    graph: Graph
    trace: ConstructionTrace
    mapping: tuple[int, ...]
    embedding: Embedding
    index: IndexValue


def _merge_vertex_chooser(policy: MergePolicy, rng: random.Random | int | None) -> Callable[[Graph], int]:
    if callable(policy):
        return policy
    if policy == "first":
        return lambda g: 0
    if policy == "last":
        return lambda g: g.n - 1
    if policy == "random":
        if rng is None:
            raise InvalidParameter("the 'random' merge policy needs a seeded rng")
        r = rng if isinstance(rng, random.Random) else random.Random(rng)
        return lambda g: r.randrange(g.n)
    raise InvalidParameter(f"unknown merge policy {policy!r}; use 'first', 'last', 'random' or a callable")


def algorithm1_embed(
    g: Graph,
    merge_vertex: MergePolicy = "first",
    rng: random.Random | int | None = None,
    egyptian: str = "auto",
) -> EmbedResult:
    """Run the embedding procedure on ``g``.

    ``merge_vertex`` chooses the vertex of the current graph used for every
    coalescence; the attached block always contributes its vertex 0 (an apex
    of ``K_{1,1,k}``, an end of ``K_2``).  ``mapping[x]`` is the image of input
    vertex ``x`` in the result, and ``embedding`` reports inducedness and
    isometry of that map as checked on the final graph.
    """
    choose = _merge_vertex_chooser(merge_vertex, rng)
    trace = ConstructionTrace()
    mapping = list(range(g.n))
    connected = is_connected(g)
    idx = index_of(g) if connected else None
    trace.record("start", {"graph": graph_operand(g)}, None if idx is None else str(idx))
    cur = g
    if idx is None or idx.is_infinite:
        cur = join(cur, empty(2))
        idx = index_of(cur)
        trace.record("join", {"with": family_operand("empty", 2)}, str(idx))

    def merge(block: Graph, operand: dict) -> None:
        nonlocal cur, idx, mapping
        u = choose(cur)
        moved = coalesce_map(cur, u)
        mapping = [moved[x] for x in mapping]
        cur = coalesce(cur, u, block, 0)
        idx = index_of(cur)
        trace.record("coalesce", {"u": u, "with": operand, "v": 0}, str(idx))

    while idx.value < 0:
        merge(complete(2), family_operand("complete", 2))
    if idx.value > 0:
        for n in egyptian_fraction(idx.value, egyptian):
            merge(negative_unit_block(n), negative_unit_operand(n))
    emb = find_induced_embedding(g, cur, mapping)
    if emb is None:
        raise AssertionError("construction lost the induced copy of the input")
    return EmbedResult(cur, trace, tuple(mapping), emb, idx)
