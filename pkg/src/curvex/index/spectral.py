"""Floating-point cross-check of the index through the eigendecomposition of D.

``1/index = sum_i (u_i . 1)^2 / lambda_i`` with ``1/0 = inf`` and ``0/0 = 0``.
Eigenvalues with ``|lambda| < rank_tol * max|lambda|`` count as zero; on such
an eigenvalue a projection above ``proj_tol`` makes the sum infinite,
otherwise the term is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from curvex.errors import EigenFailure
from curvex.graph.core import Graph, distance_matrix
from curvex.index.core import index_of
from curvex.values import IndexValue

RANK_TOL = 1e-9
PROJ_TOL = 1e-9


@dataclass(frozen=True)
class SpectralCheck:
    eigenvalues: tuple[float, ...]
    projections: tuple[float, ...]
    reciprocal_sum: float
    exact: IndexValue
    verdict: str  # "agree", "disagree" or "inconclusive"

    @property
    def approx_index(self) -> float:
        if np.isinf(self.reciprocal_sum):
            return 0.0
        if self.reciprocal_sum == 0:
            return float("inf")
        return 1.0 / self.reciprocal_sum


def spectral_cross_check(
    g: Graph, tol: float = 1e-6, rank_tol: float = RANK_TOL, proj_tol: float = PROJ_TOL
) -> SpectralCheck:
    d = distance_matrix(g).astype(float)
    try:
        lam, u = np.linalg.eigh(d)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    proj = (u.sum(axis=0)) ** 2
    scale = max(float(np.abs(lam).max()), 1.0)
    total = 0.0
    for li, pi in zip(lam, proj):
        if abs(li) < rank_tol * scale:
            if pi > proj_tol:
                total = float("inf")
                break
            continue
        total += pi / li
    exact = index_of(g)
    if exact.is_infinite:
        verdict = "agree" if abs(total) <= tol else "inconclusive"
    elif exact.is_zero:
        verdict = "agree" if np.isinf(total) else "inconclusive"
    elif np.isinf(total) or total == 0:
        verdict = "disagree"
    else:
        verdict = "agree" if abs(1.0 / total - float(exact.value)) <= tol else "disagree"
    return SpectralCheck(tuple(lam.tolist()), tuple(proj.tolist()), float(total), exact, verdict)
