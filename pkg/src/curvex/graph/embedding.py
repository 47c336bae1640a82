from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from curvex.errors import MapInvalid
from curvex.graph.core import Graph, bfs_distances


@dataclass(frozen=True)
class Embedding:
    mapping: tuple[int, ...]
    induced: bool
    isometric: bool


def find_induced_embedding(g: Graph, big: Graph, mapping: Sequence[int]) -> Embedding | None:
    """Check a candidate vertex map ``g -> big`` supplied by a construction.

    This is a verifier, not a search: ``mapping[x]`` is the image of vertex
    ``x``.  Raises ``MapInvalid`` when the map is not an injection into
    ``V(big)``; returns ``None`` when the image does not induce ``g``.  The isometric flag compares
    ``d_big(f(x), f(y))`` with ``d_g(x, y)`` over all pairs (disconnected
    pairs of ``g`` never count as isometric).
    """
    if len(mapping) != g.n:
        raise MapInvalid(f"map has {len(mapping)} entries for a graph on {g.n} vertices")
    if g.n > big.n:
        raise MapInvalid("pattern graph is larger than the host graph")
    if any(not 0 <= y < big.n for y in mapping) or len(set(mapping)) != len(mapping):
        raise MapInvalid("map is not an injection into the host vertex set")
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y) != big.has_edge(mapping[x], mapping[y]):
                return None
    isometric = True
    for x in range(g.n):
        dg = bfs_distances(g, x)
        db = bfs_distances(big, mapping[x])
        if any(dg[y] != db[mapping[y]] for y in range(g.n)):
            isometric = False
            break
    return Embedding(tuple(mapping), True, isometric)
