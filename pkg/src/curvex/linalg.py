"""Exact linear algebra over the rationals.

Matrices are any rectangular nested sequence (lists, tuples, integer numpy
arrays); entries are converted to ``Fraction`` or ``int`` on entry and every
result is exact.  Elimination is fraction-free (Bareiss): each row is scaled
to integers, and after ``k`` pivots every active entry is a ``(k+1)``-minor of
the scaled matrix, so the division by the previous pivot is always exact.
Pivots are chosen as the first nonzero entry of a column, top to bottom.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import lcm

from curvex.errors import DimensionMismatch, NotSymmetric
from curvex.values import INFINITE, IndexValue, Potential

Matrix = Sequence[Sequence]
Vector = Sequence


def as_rows(a) -> list[list[Fraction]]:
    rows = a.tolist() if hasattr(a, "tolist") else [list(r) for r in a]
    if not rows:
        raise DimensionMismatch("matrix has no rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionMismatch("ragged matrix")
    return [[Fraction(v) for v in r] for r in rows]


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        scale = lcm(*(v.denominator for v in r)) if r else 1
        out.append([int(v * scale) for v in r])
    return out


def _echelon(rows: list[list[int]], ncols: int) -> list[int]:
    """In-place Bareiss elimination on the first ``ncols`` columns.

    Columns past ``ncols`` (an augmented right-hand side) are carried along.
    Returns the pivot columns; row ``i`` holds the pivot for ``pivots[i]``.
    """
    m = len(rows)
    width = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        piv = prow[c]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = row[:c] + [0] + [(piv * row[j] - f * prow[j]) // prev for j in range(c + 1, width)]
            elif piv != prev:
                rows[i] = row[:c + 1] + [(piv * row[j]) // prev for j in range(c + 1, width)]
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _back_substitute(rows: list[list[int]], pivots: list[int], ncols: int, rhs: list[Fraction], free: dict[int, Fraction]) -> list[Fraction]:
    x = [Fraction(0)] * ncols
    for c, v in free.items():
        x[c] = v
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        row = rows[i]
        s = rhs[i]
        for j in range(c + 1, ncols):
            if row[j]:
                s -= row[j] * x[j]
        x[c] = s / row[c]
    return x


def rank(a: Matrix) -> int:
    rows = _integer_rows(as_rows(a))
    return len(_echelon(rows, len(rows[0])))


def solve(a: Matrix, b: Vector) -> list[Fraction] | None:
    """Some exact solution of ``a x = b``, or ``None`` when inconsistent.

    Free variables are set to zero.
    """
    rows = as_rows(a)
    if len(b) != len(rows):
        raise DimensionMismatch(f"right-hand side has length {len(b)}, matrix has {len(rows)} rows")
    n = len(rows[0])
    aug = _integer_rows([r + [Fraction(v)] for r, v in zip(rows, b)])
    pivots = _echelon(aug, n)
    k = len(pivots)
    if any(row[n] for row in aug[k:]):
        return None
    return _back_substitute(aug, pivots, n, [Fraction(row[n]) for row in aug], {})


def kernel_basis(a: Matrix) -> list[list[Fraction]]:
    """Basis of the null space, one vector per non-pivot column."""
    rows = _integer_rows(as_rows(a))
    n = len(rows[0])
    pivots = _echelon(rows, n)
    zero = [Fraction(0)] * len(rows)
    basis = []
    for f in sorted(set(range(n)) - set(pivots)):
        basis.append(_back_substitute(rows, pivots, n, zero, {f: Fraction(1)}))
    return basis


def matvec(a: Matrix, x: Vector) -> list[Fraction]:
    rows = as_rows(a)
    if len(rows[0]) != len(x):
        raise DimensionMismatch("matrix width and vector length differ")
    return [sum((v * Fraction(w) for v, w in zip(r, x) if v), Fraction(0)) for r in rows]


def dot(x: Vector, y: Vector) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))


def _check_symmetric(rows: list[list[Fraction]]) -> None:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSymmetric("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")


def min_norm_solve(a: Matrix, b: Vector) -> list[Fraction] | None:
    """Minimum-Euclidean-norm solution of ``a x = b`` for symmetric ``a``.

    This is ``pinv(a) @ b`` whenever ``b`` lies in the range of ``a``: a
    particular solution minus its orthogonal projection onto ``ker(a)``,
    obtained from an exact Gram solve.  ``None`` if ``b`` is not in the range.
    """
    rows = as_rows(a)
    _check_symmetric(rows)
    x0 = solve(rows, b)
    if x0 is None:
        return None
    kern = kernel_basis(rows)
    if not kern:
        return x0
    gram = [[dot(u, v) for v in kern] for u in kern]
    coef = solve(gram, [dot(u, x0) for u in kern])
    return [xi - sum((c * u[i] for c, u in zip(coef, kern)), Fraction(0)) for i, xi in enumerate(x0)]


def bordered_index(q: Matrix, weights: Vector) -> tuple[Fraction, list[Fraction]] | None:
    """Solve ``q y = c 1`` with ``weights . y = 1`` for ``(c, y)``.

    ``q`` may be a quotient of a distance matrix (not symmetric); returns
    ``None`` when the system is inconsistent.
    """
    rows = as_rows(q)
    n = len(rows)
    if len(rows[0]) != n or len(weights) != n:
        raise DimensionMismatch("bordered system needs a square matrix and matching weights")
    big = [r + [Fraction(-1)] for r in rows] + [[Fraction(w) for w in weights] + [Fraction(0)]]
    sol = solve(big, [Fraction(0)] * n + [Fraction(1)])
    if sol is None:
        return None
    return sol[-1], sol[:-1]


def solve_affine_index(d: Matrix) -> tuple[IndexValue, Potential | None]:
    """Index of a symmetric matrix via the bordered system ``[[D, -1], [1^T, 0]]``.

    Consistent with constant ``c``: ``Finite(c)`` and a unit-sum witness ``x``
    with ``D x = c 1``.  Inconsistent: every solution of ``D x = 1`` has zero
    sum (a kernel vector with nonzero sum would make ``c = 0`` feasible), so the
    index is infinite and no witness exists.
    """
    rows = as_rows(d)
    _check_symmetric(rows)
    res = bordered_index(rows, [1] * len(rows))
    if res is None:
        return INFINITE, None
    c, x = res
    return IndexValue(c), Potential(x, c, against=rows)
