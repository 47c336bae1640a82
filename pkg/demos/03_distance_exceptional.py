"""
Distance exceptional graphs
===========================

A graph is distance exceptional when ``D x = 1`` has no solution. This
happens exactly when the index is zero. The smallest ones have seven
vertices; here they are found by brute force.
"""

import time

from curvex.census import enumerate_connected, scan_graph6
from curvex.graph import coalesce, parse_graph6, serialize_graph6
from curvex.index import index_of, is_distance_exceptional

t0 = time.perf_counter()
lines = [serialize_graph6(g) for g in enumerate_connected(7)]
report = scan_graph6(lines, jobs=1)
print(f"{report.total_connected} connected graphs on 7 vertices, {report.dx_count} DX ({time.perf_counter() - t0:.1f}s)")

for text in report.dx_examples:
    g = parse_graph6(text)
    dx, cert = is_distance_exceptional(g)
    print(text, g.edges())
    print("  kernel witness:", cert.potential.to_strings())

# Coalescing two of them gives another one
a, b = (parse_graph6(s) for s in report.dx_examples)
print("coalesced:", index_of(coalesce(a, 3, b, 0)))

# The five most common indices at n = 7
top = sorted(report.index_histogram.items(), key=lambda kv: -kv[1])[:5]
print(top)
