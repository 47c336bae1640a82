"""
Constructing graphs with a chosen index
=======================================

Three constructions:

* a basket graph with four pendants attached anywhere is DX;
* any rational number is the index of some graph;
* every graph sits inside a DX graph as an induced subgraph.
"""

import random
from fractions import Fraction

from curvex.construct import algorithm1_embed, basket_jailbreak, basket_potential, realize_rational_index
from curvex.graph import grid, hypercube
from curvex.index import index_of

bp = basket_potential(3)
print("basket(3) potential:", [str(v) for v in bp.x], "constant", bp.iota)

rng = random.Random(1)
for _ in range(3):
    res = basket_jailbreak(1, rng=rng)
    print("pendants at", res.placements, "->", res.graph.n, "vertices,", res.graph.m, "edges, DX:", res.certificate.dx)

for q in ["-7/3", "1/3", "22/7"]:
    r = realize_rational_index(q)
    print(f"target {q}: {r.graph.n} vertices, index {index_of(r.graph)}")

for g in (grid(5, 5), hypercube(4)):
    res = algorithm1_embed(g)
    print(g, "->", res.graph, "index", res.index, "isometric", res.embedding.isometric)
    print(res.trace.to_jsonl(), end="")
