"""Erdős–Rényi sampling harness for the curvature index.

The experiment reports where the index of ``G(n, p)`` lands; it asserts
nothing about it.
"""

from __future__ import annotations

import json
import random
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from curvex.census.scan import default_jobs
from curvex.errors import InvalidParameter
from curvex.graph.core import Graph, diameter, is_connected
from curvex.index.core import index_of
from curvex.values import IndexValue, format_rational


def sample_gnp(n: int, p: Fraction, rng: random.Random) -> Graph:
    """One draw of ``G(n, p)``; each pair is an edge when an integer drawn
    uniformly below ``p.denominator`` falls under ``p.numerator``, so the
    edge probability is exactly ``p``."""
    num, den = p.numerator, p.denominator
    return Graph(n, [(u, v) for v in range(1, n) for u in range(v) if rng.randrange(den) < num])


def _measure(g: Graph) -> tuple[str, int]:
    return str(index_of(g)), diameter(g)


@dataclass(frozen=True)
class GnpSample:
    n: int
    p: Fraction
    trials: int
    seed: int
    indices: tuple[IndexValue, ...]
    diameters: tuple[int, ...]
    discarded: int

    @property
    def diam2_fraction(self) -> float:
        return sum(d <= 2 for d in self.diameters) / self.trials

    @property
    def median(self) -> float:
        return float(statistics.median(float(i) for i in self.indices))

    @property
    def near_target_fraction(self) -> float:
        """Share of indices within 0.1 of ``2 - p``."""
        target = 2 - self.p
        close = sum(i.is_finite and abs(i.value - target) <= Fraction(1, 10) for i in self.indices)
        return close / self.trials

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": format_rational(self.p),
            "trials": self.trials,
            "seed": self.seed,
            "discarded_disconnected": self.discarded,
            "indices": [str(i) for i in self.indices],
            "diam2_fraction": self.diam2_fraction,
            "median_index": self.median,
            "target": format_rational(2 - self.p),
            "fraction_within_0.1_of_target": self.near_target_fraction,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def gnp_experiment(n: int, p: Fraction | str, trials: int, seed: int, jobs: int | None = None) -> GnpSample:
    """Draw connected ``G(n, p)`` samples until ``trials`` are collected.

    Disconnected draws are thrown away and counted. The graphs are drawn in
    the parent process from ``random.Random(seed)``, so the sample depends
    only on ``(n, p, trials, seed)``. Only the index computations are spread
    over ``jobs`` workers.
    """
    p = Fraction(p)
    if not 0 < p < 1:
        raise InvalidParameter(f"p must lie strictly between 0 and 1, got {p}")
    if n < 2:
        raise InvalidParameter(f"n must be at least 2, got {n}")
    if trials < 1:
        raise InvalidParameter(f"trials must be positive, got {trials}")
    jobs = default_jobs() if jobs is None else jobs
    rng = random.Random(seed)
    graphs: list[Graph] = []
    discarded = 0
    while len(graphs) < trials:
        g = sample_gnp(n, p, rng)
        if is_connected(g):
            graphs.append(g)
        else:
            discarded += 1
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            measured = list(pool.map(_measure, graphs, chunksize=8))
    else:
        measured = [_measure(g) for g in graphs]
    return GnpSample(
        n=n,
        p=p,
        trials=trials,
        seed=seed,
        indices=tuple(IndexValue.parse(s) for s, _ in measured),
        diameters=tuple(d for _, d in measured),
        discarded=discarded,
    )
