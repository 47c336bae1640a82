"""Direct computation versus closed forms over the standard families."""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass

from curvex.graph.core import Graph
from curvex.graph.families import family
from curvex.index.core import index_of
from curvex.index.formulas import family_index_formula, tree_index


@dataclass(frozen=True)
class FamilyCheck:
    family: str
    params: tuple[int, ...]
    direct: str
    formula: str

    @property
    def ok(self) -> bool:
        return self.direct == self.formula

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params), "direct": self.direct, "formula": self.formula, "ok": self.ok}


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random recursive tree: vertex ``v`` hangs off a uniform earlier vertex."""
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def partitions(total: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-decreasing integer partitions of ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(min_part, total + 1):
        for rest in partitions(total - first, first):
            yield (first, *rest)


def family_cases(kmax: int = 9) -> list[tuple[str, tuple[int, ...]]]:
    cases: list[tuple[str, tuple[int, ...]]] = []
    cases += [("cycle", (n,)) for n in range(3, 13)]
    cases += [("hypercube", (d,)) for d in range(2, 6)]
    cases += [("grid", (a, b)) for a in range(1, 5) for b in range(a, 5)]
    cases += [("complete", (n,)) for n in range(2, 9)]
    cases += [("complete_multipartite", p) for s in range(2, 10) for p in partitions(s) if len(p) >= 2]
    cases += [("torus", (n, d)) for n in range(3, 7) for d in (1, 2)]
    cases += [("path", (k,)) for k in range(1, 10)]
    cases += [("star", (k,)) for k in range(1, 9)]
    cases += [("basket", (k,)) for k in range(3, kmax + 1)]
    return cases


def verify_families(kmax: int = 9, seed: int = 0, trees: int = 10, max_tree_order: int = 12) -> list[FamilyCheck]:
    """Compare ``index_of`` with the closed form on every family case plus
    ``trees`` random trees drawn from ``random.Random(seed)``."""
    checks = []
    for name, params in family_cases(kmax):
        direct = index_of(family(name, *params))
        checks.append(FamilyCheck(name, params, str(direct), str(family_index_formula(name, *params))))
    rng = random.Random(seed)
    for _ in range(trees):
        n = rng.randint(2, max_tree_order)
        t = random_tree(n, rng)
        checks.append(FamilyCheck("tree", (n,), str(index_of(t)), str(tree_index(n))))
    return checks
