"""Curvature index, distance exceptionality and related graph quantities."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from curvex.errors import CertificateViolation, Disconnected, DistanceExceptional
from curvex.graph.core import Graph, add_pendant, cone_distance_matrix, distance_matrix, is_connected, twin_classes
from curvex.linalg import bordered_index, min_norm_solve, solve_affine_index
from curvex.values import INFINITE, IndexValue, Potential, format_rational


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected(f"graph on {g.n} vertices is not connected")


def twin_quotient(g: Graph) -> tuple[list[list[int]], list[int], list[list[int]]]:
    """Twin classes of a connected graph and the class-level distance sums.

    Returns ``(classes, sizes, q)`` where ``q[i][j]`` is the sum of distances
    from any member of class ``i`` to all members of class ``j``.  Distances
    between classes are BFS distances in the quotient graph (twins are
    interchangeable on shortest paths); inside a class they are 2 for false
    twins and 1 for true twins.
    """
    cls = twin_classes(g)
    owner = [0] * g.n
    for k, (members, _) in enumerate(cls):
        for v in members:
            owner[v] = k
    qadj = [{owner[w] for v in members for w in g._adj[v]} - {k} for k, (members, _) in enumerate(cls)]
    sizes = [len(members) for members, _ in cls]
    m = len(cls)
    q = []
    for s in range(m):
        dist = [-1] * m
        dist[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in qadj[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        if min(dist) < 0:
            raise Disconnected(f"graph on {g.n} vertices is not connected")
        row = [dist[j] * sizes[j] for j in range(m)]
        row[s] = (sizes[s] - 1) * cls[s][1]
        q.append(row)
    return [members for members, _ in cls], sizes, q


def curvature_index(g: Graph, reduce: bool = True) -> tuple[IndexValue, Potential | None]:
    """Exact curvature index with a unit-sum witness when finite.

    With ``reduce=True`` the bordered system is solved on the twin quotient:
    swapping twins is an automorphism, so averaging any solution over those
    swaps gives one that is constant on twin classes, and the reduced system is
    consistent exactly when the full one is.  The expanded witness is checked
    against BFS distances of ``g`` itself.  ``reduce=False`` solves the bordered
    system on the full distance matrix.
    """
    _require_connected(g)
    if not reduce:
        value, pot = solve_affine_index(distance_matrix(g))
        if pot is not None:
            pot = Potential(pot.x, pot.constant, against=g)
        return value, pot
    classes, sizes, q = twin_quotient(g)
    res = bordered_index(q, sizes)
    if res is None:
        return INFINITE, None
    c, y = res
    x = [Fraction(0)] * g.n
    for members, yi in zip(classes, y):
        for v in members:
            x[v] = yi
    return IndexValue(c), Potential(x, c, against=g)


def index_of(g: Graph) -> IndexValue:
    return curvature_index(g)[0]


@dataclass(frozen=True)
class DXCertificate:
    """Outcome of a distance-exceptionality check.

    For a DX graph ``potential`` is a unit-sum kernel vector (constant 0).
    Otherwise it is a unit-sum potential with nonzero constant, or ``None``
    when the index is infinite.
    """

    dx: bool
    index: IndexValue
    potential: Potential | None

    def to_dict(self) -> dict:
        return {
            "index": str(self.index),
            "dx": self.dx,
            "potential": None if self.potential is None else self.potential.to_strings(),
            "constant": None if self.potential is None else format_rational(self.potential.constant),
        }


def certificate(g: Graph) -> DXCertificate:
    value, pot = curvature_index(g)
    return DXCertificate(value.is_zero, value, pot)


def is_distance_exceptional(g: Graph) -> tuple[bool, DXCertificate]:
    cert = certificate(g)
    return cert.dx, cert


def modified_index(g: Graph) -> IndexValue:
    """Index of the cone-restricted matrix ``min(D, 2)`` (2 across components)."""
    return solve_affine_index(cone_distance_matrix(g))[0]


def steinerberger_curvature(g: Graph) -> list[Fraction] | None:
    """``pinv(D) @ (n 1)``; ``None`` for a distance exceptional graph."""
    _require_connected(g)
    return min_norm_solve(distance_matrix(g), [g.n] * g.n)


def index_via_pseudoinverse(g: Graph) -> IndexValue:
    """``n / sum(kappa)``, infinite when the curvature sums to zero."""
    kappa = steinerberger_curvature(g)
    if kappa is None:
        raise DistanceExceptional("curvature is undefined: 1 is not in the range of D")
    total = sum(kappa, Fraction(0))
    if total == 0:
        return INFINITE
    return IndexValue(Fraction(g.n) / total)


def wiener_index(g: Graph) -> int:
    _require_connected(g)
    return int(distance_matrix(g).sum()) // 2


def pendant_potential_update(potential: Potential, g: Graph, u: int) -> Potential:
    """Carry a potential of ``g`` over to ``add_pendant(g, u)``.

    Moves mass 1/2 from ``u`` onto the new leaf; the constant grows by 1/2.
    The result is re-verified against the enlarged graph.
    """
    if potential.n != g.n:
        raise CertificateViolation(f"potential has length {potential.n}, graph has {g.n} vertices")
    half = Fraction(1, 2)
    x = list(potential.x)
    x[u] -= half
    x.append(half)
    return Potential(x, potential.constant + half, against=add_pendant(g, u))
