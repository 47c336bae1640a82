"""
Building indices out of smaller graphs
======================================

Cartesian products and vertex coalescence add indices. A join is governed by
the modified indices of its two sides.
"""

from curvex.graph import cartesian_product, coalesce, complete, cycle, empty, join, path
from curvex.index import index_of, join_branch, modified_index, predict_join

g, h = cycle(5), path(4)
print("C5:", index_of(g), " P4:", index_of(h))
print("C5 x P4:", index_of(cartesian_product(g, h)))
print("C5 . P4:", index_of(coalesce(g, 0, h, 0)))

# The join uses the modified index, which caps distances at 2
pairs = [(complete(2), empty(2)), (empty(2), empty(2)), (complete(3), empty(3)), (cycle(5), path(3))]
for a, b in pairs:
    ma, mb = modified_index(a), modified_index(b)
    print(f"branch {join_branch(ma, mb)}: predicted {predict_join(ma, mb)}, direct {index_of(join(a, b))}")
