"""Index values, curvature potentials and rational (de)serialization.

Rationals are written ``"p/q"`` with ``q >= 1`` always present (``"-2/1"``,
``"0/1"``); the infinite index is ``"inf"``.  ``parse_rational`` also accepts a
bare integer.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import InitVar, dataclass, field
from fractions import Fraction
from functools import total_ordering

from curvex.errors import CertificateViolation, DimensionMismatch, Disconnected, InvalidParameter
from curvex.graph.core import Graph, bfs_distances, twin_classes


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameter(f"not a rational number: {text!r}") from exc


@total_ordering
@dataclass(frozen=True)
class IndexValue:
    """A curvature index: a finite rational, or infinite when ``value`` is None.

    Addition follows the extended-real rule ``inf + q = inf``.  Ordering puts
    infinity above every finite value (used only for sorting and medians).
    """

    value: Fraction | None

    @classmethod
    def finite(cls, q: Fraction | int | str) -> IndexValue:
        return cls(parse_rational(q) if isinstance(q, str) else Fraction(q))

    @classmethod
    def parse(cls, text: str) -> IndexValue:
        if text.strip() == "inf":
            return INFINITE
        return cls.finite(text)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: IndexValue | Fraction | int) -> IndexValue:
        if not isinstance(other, IndexValue):
            other = IndexValue.finite(other)
        if self.value is None or other.value is None:
            return INFINITE
        return IndexValue(self.value + other.value)

    __radd__ = __add__

    def __neg__(self) -> IndexValue:
        return self if self.value is None else IndexValue(-self.value)

    def __lt__(self, other: IndexValue) -> bool:
        if not isinstance(other, IndexValue):
            return NotImplemented
        if self.value is None:
            return False
        return other.value is None or self.value < other.value

    def __float__(self) -> float:
        return float("inf") if self.value is None else float(self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else format_rational(self.value)

    def __repr__(self) -> str:
        return f"IndexValue({self})"


INFINITE = IndexValue(None)


def _as_fractions(x: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in x)


def graph_row_products(g: Graph, x: Sequence[Fraction]) -> list[Fraction]:
    """``D(g) @ x`` computed from BFS, never materializing ``D``.

    When ``x`` is constant on every twin class, only one BFS per class is
    needed: twins have identical distances to all other vertices, and the
    in-class terms cancel because the entries of ``x`` agree.
    """
    if len(x) != g.n:
        raise DimensionMismatch(f"vector of length {len(x)} for a graph on {g.n} vertices")
    classes = twin_classes(g)
    constant_on_classes = all(len({x[v] for v in members}) == 1 for members, _ in classes)
    groups = classes if constant_on_classes else [([v], 0) for v in range(g.n)]
    out: list[Fraction | None] = [None] * g.n
    for members, _ in groups:
        dist = bfs_distances(g, members[0])
        if min(dist) < 0:
            raise Disconnected("potential check needs a connected graph")
        val = sum((d * xv for d, xv in zip(dist, x) if d), Fraction(0))
        for v in members:
            out[v] = val
    return out  # type: ignore[return-value]


def matrix_row_products(matrix, x: Sequence[Fraction]) -> list[Fraction]:
    rows = matrix.tolist() if hasattr(matrix, "tolist") else [list(r) for r in matrix]
    if any(len(r) != len(x) for r in rows):
        raise DimensionMismatch("matrix and vector sizes differ")
    return [sum((Fraction(a) * b for a, b in zip(r, x) if a), Fraction(0)) for r in rows]


@dataclass(frozen=True)
class Potential:
    """Unit-sum vector ``x`` with ``D x = constant * 1``.

    ``against`` is the graph (or symmetric matrix) the certificate refers to;
    both conditions are checked exactly on construction and a violation raises
    ``CertificateViolation``.
    """

    x: tuple[Fraction, ...]
    constant: Fraction
    against: InitVar[object]
    total: Fraction = field(init=False)

    def __post_init__(self, against) -> None:
        x = _as_fractions(self.x)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "constant", Fraction(self.constant))
        total = sum(x, Fraction(0))
        object.__setattr__(self, "total", total)
        if total != 1:
            raise CertificateViolation(f"potential sums to {total}, expected 1")
        if isinstance(against, Graph):
            products = graph_row_products(against, x)
        else:
            products = matrix_row_products(against, x)
        bad = [i for i, v in enumerate(products) if v != self.constant]
        if bad:
            raise CertificateViolation(
                f"D x differs from {self.constant} * 1 at {len(bad)} rows (first: row {bad[0]} = {products[bad[0]]})"
            )

    @property
    def n(self) -> int:
        return len(self.x)

    def to_strings(self) -> list[str]:
        return [format_rational(v) for v in self.x]
