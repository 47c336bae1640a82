"""Closed-form basket potentials and the pendant jailbreak of odd baskets."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from curvex.errors import InvalidParameter, PlacementLengthMismatch
from curvex.graph.core import Graph, add_pendant
from curvex.graph.families import basket
from curvex.graph.trace import ConstructionTrace, family_operand
from curvex.index.core import DXCertificate, pendant_potential_update
from curvex.index.formulas import basket_index
from curvex.values import IndexValue, Potential, format_rational


def basket_block(m: int) -> list[Fraction]:
    """``a_i = ((-3)^(i-1) + (-3)^(m-i)) / 2`` for ``i = 1..m``."""
    return [Fraction((-3) ** (i - 1) + (-3) ** (m - i), 2) for i in range(1, m + 1)]


@dataclass(frozen=True)
class BasketPotential:
    k: int
    potential: Potential

    @property
    def x(self) -> tuple[Fraction, ...]:
        return self.potential.x

    @property
    def iota(self) -> Fraction:
        return self.potential.constant


def basket_potential(k: int) -> BasketPotential:
    """Unit-sum potential of ``basket(k)`` with constant ``((-3)^k + 4k - 1)/8``.

    The short path (endpoints included) carries the length-``k`` block and each
    long-path interior the length-``k-1`` block; the certificate is checked
    against BFS distances of ``basket(k)``.
    """
    if k < 3:
        raise InvalidParameter(f"basket potentials need k >= 3, got {k}")
    x = basket_block(k) + 3 * basket_block(k - 1)
    return BasketPotential(k, Potential(x, basket_index(k).value, against=basket(k)))


def jailbreak_pendants(j: int) -> int:
    """Number of pendants, ``2|s|``, that bring ``basket(2j+1)`` to index zero."""
    if j < 1:
        raise InvalidParameter(f"jailbreak needs j >= 1, got {j}")
    return -2 * int(basket_index(2 * j + 1).value)


@dataclass(frozen=True)
class JailbreakResult:
    graph: Graph
    certificate: DXCertificate
    placements: tuple[int, ...]
    trace: ConstructionTrace


def basket_jailbreak(
    j: int,
    placement: Sequence[int] | str = "random",
    rng: random.Random | int | None = None,
    pendants: int | None = None,
) -> JailbreakResult:
    """Attach pendants to ``basket(2j+1)``, carrying the potential along.

    ``placement`` lists the attachment vertex of each pendant (a vertex of the
    graph as it is at that step, so earlier pendants are allowed), or is
    ``"random"`` to draw uniformly from ``rng``.  ``pendants`` overrides the
    count (default ``2|s|``) for control experiments; an explicit placement
    list must have exactly that length.
    """
    count = jailbreak_pendants(j) if pendants is None else pendants
    if isinstance(placement, str):
        if placement != "random":
            raise InvalidParameter(f"placement must be a vertex list or 'random', got {placement!r}")
        if rng is None:
            raise InvalidParameter("random placement needs an explicitly seeded rng")
        rng = rng if isinstance(rng, random.Random) else random.Random(rng)
        choose = None
    else:
        if len(placement) != count:
            raise PlacementLengthMismatch(f"{len(placement)} placements given, {count} pendants required")
        choose = list(placement)
    k = 2 * j + 1
    g = basket(k)
    pot = basket_potential(k).potential
    trace = ConstructionTrace()
    trace.record("start", {"graph": family_operand("basket", k)}, format_rational(pot.constant))
    used = []
    for step in range(count):
        u = rng.randrange(g.n) if choose is None else choose[step]
        pot = pendant_potential_update(pot, g, u)
        g = add_pendant(g, u)
        used.append(u)
        trace.record("pendant", {"u": u}, format_rational(pot.constant))
    cert = DXCertificate(pot.constant == 0, IndexValue(pot.constant), pot)
    return JailbreakResult(g, cert, tuple(used), trace)
