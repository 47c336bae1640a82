"""
The curvature index of a few small graphs
=========================================

Every connected graph has a distance matrix ``D``. Its curvature index is the
constant ``c`` for which some vector ``x`` with entries summing to one solves
``D x = c 1``. Everything below is exact rational arithmetic.
"""

from curvex import certificate, family, index_of, steinerberger_curvature
from curvex.graph import complete, empty, join

# Paths and trees: a tree on n vertices always has index (n - 1)/2
for k in range(1, 7):
    print("P%d" % k, index_of(family("path", k)))

# Cycles: n/4 for even n, (n^2 - 1)/(4n) for odd n
print([str(index_of(family("cycle", n))) for n in range(3, 10)])

# A witness comes with every finite index, already checked against D
cert = certificate(family("cycle", 5))
print(cert.to_dict())

# Some joins have no unit-sum potential at all; the index is then infinite
print("K3 + 3K1:", index_of(join(complete(3), empty(3))))

# Minimum-norm curvature, kappa = pinv(D) (n 1)
print("kappa(star(3)) =", [str(k) for k in steinerberger_curvature(family("star", 3))])
