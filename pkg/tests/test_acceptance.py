"""Acceptance suite: one PASS/FAIL line per criterion.

The lines are collected in ``RESULTS`` and printed in the pytest terminal
summary (see ``conftest.py``). Running this file directly prints them too.
Tolerances are fixed here and nowhere else.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from fractions import Fraction

import pytest

from curvex.census import enumerate_connected, gnp_experiment, scan_graph6
from curvex.construct import algorithm1_embed, basket_jailbreak, realize_rational_index
from curvex.graph import (
    Graph,
    cartesian_product,
    coalesce,
    complete,
    disjoint_union,
    empty,
    grid,
    hypercube,
    is_connected,
    join,
    path,
    serialize_graph6,
    star,
)
from curvex.index import (
    index_of,
    index_via_pseudoinverse,
    is_distance_exceptional,
    join_branch,
    modified_index,
    predict_coalesce,
    predict_join,
    predict_product,
    spectral_cross_check,
    verify_families,
)

from conftest import DATA, random_connected

CENSUS7_SECONDS = 30.0
CENSUS8_SECONDS = 300.0
CENSUS8_JOBS = 4
FAMILIES_SECONDS = 120.0
COMPOSITION_MIN_PAIRS = 200
SPECTRAL_TOL = 1e-6
GNP_N, GNP_P, GNP_TRIALS, GNP_SEED = 30, Fraction(1, 2), 200, 2024
GNP_DIAM2_MIN = 0.95

RESULTS: list[str] = []


def report(tag: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail}")
    assert ok, detail


def test_ac1_census_n7():
    t0 = time.perf_counter()
    lines = [serialize_graph6(g) for g in enumerate_connected(7)]
    rep = scan_graph6(lines, jobs=1)
    dt = time.perf_counter() - t0
    ok = rep.total_connected == 853 and rep.dx_count == 2 and dt < CENSUS7_SECONDS
    report("AC1 census n=7", ok, f"{rep.dx_count} DX of {rep.total_connected} connected in {dt:.1f}s (limit {CENSUS7_SECONDS:.0f}s, single process)")


def test_ac2_census_n8():
    t0 = time.perf_counter()
    with open(DATA / "conn8.g6") as fh:
        rep = scan_graph6(fh, jobs=CENSUS8_JOBS)
    dt = time.perf_counter() - t0
    ok = rep.total_connected == 11117 and rep.dx_count == 14 and dt < CENSUS8_SECONDS
    report("AC2 census n=8", ok, f"{rep.dx_count} DX of {rep.total_connected} connected in {dt:.1f}s at {CENSUS8_JOBS} workers (limit {CENSUS8_SECONDS:.0f}s)")


@pytest.mark.skipif(not os.environ.get("CURVEX_CONN9"), reason="set CURVEX_CONN9 to a graph6 file of connected 9-vertex graphs")
def test_ac2_extended_census_n9():
    with open(os.environ["CURVEX_CONN9"]) as fh:
        rep = scan_graph6(fh, jobs=int(os.environ.get("CURVEX_JOBS", "4")))
    report("AC2x census n=9", rep.dx_count == 398, f"{rep.dx_count} DX of {rep.total_connected} connected")


def test_ac3_family_formulas():
    t0 = time.perf_counter()
    checks = verify_families(kmax=9, seed=0)
    dt = time.perf_counter() - t0
    bad = [c for c in checks if not c.ok]
    fams = sorted({c.family for c in checks})
    ok = not bad and dt < FAMILIES_SECONDS
    report("AC3 family closed forms", ok, f"{len(checks) - len(bad)}/{len(checks)} exact over {', '.join(fams)} in {dt:.1f}s")


def _composition_pool(rng: random.Random) -> list[Graph]:
    pool = [random_connected(rng, rng.randint(1, 7)) for _ in range(18)]
    pool += [join(complete(3), empty(3)), join(complete(2), empty(4))]
    return pool


def _join_pool(rng: random.Random) -> list[Graph]:
    pool = [empty(2), empty(3), empty(4), complete(1), complete(2), complete(3), star(4), disjoint_union(path(3), complete(1))]
    pool += [join(complete(3), empty(3)), join(complete(2), empty(4))]
    pool += [random_connected(rng, rng.randint(1, 6)) for _ in range(6)]
    return pool


def test_ac4_composition_laws():
    rng = random.Random(404)
    pool = _composition_pool(rng)
    idx = {id(g): index_of(g) for g in pool}
    pairs = list(itertools.combinations_with_replacement(pool, 2))
    bad: list[str] = []
    n_prod = n_coal = 0
    for g, h in pairs:
        n_coal += 1
        u, v = rng.randrange(g.n), rng.randrange(h.n)
        if index_of(coalesce(g, u, h, v)) != predict_coalesce(idx[id(g)], idx[id(h)]):
            bad.append(f"coalesce {serialize_graph6(g)} {serialize_graph6(h)}")
        if g.n * h.n <= 49:
            n_prod += 1
            if index_of(cartesian_product(g, h)) != predict_product(idx[id(g)], idx[id(h)]):
                bad.append(f"product {serialize_graph6(g)} {serialize_graph6(h)}")
    jpool = _join_pool(rng)
    branches = set()
    n_join = 0
    inf_hits = 0
    for g, h in itertools.product(jpool, repeat=2):
        n_join += 1
        mg, mh = modified_index(g), modified_index(h)
        branches.add(join_branch(mg, mh))
        got = index_of(join(g, h))
        inf_hits += got.is_infinite
        if got != predict_join(mg, mh):
            bad.append(f"join {serialize_graph6(g)} {serialize_graph6(h)}")
    inf_coal = sum(idx[id(g)].is_infinite or idx[id(h)].is_infinite for g, h in pairs)
    ok = not bad and len(pairs) >= COMPOSITION_MIN_PAIRS and branches == {1, 2, 3, 4, 5, 6} and inf_coal > 0
    report(
        "AC4 composition laws",
        ok,
        f"{n_coal} coalesce + {n_prod} product checks on {len(pairs)} pairs ({inf_coal} with an infinite factor), "
        f"{n_join} joins covering branches {sorted(branches)} ({inf_hits} infinite); {len(bad)} mismatches",
    )


def test_ac5_basket_jailbreak():
    shapes, dx_all = set(), True
    for seed in range(20):
        res = basket_jailbreak(1, rng=seed)
        shapes.add((res.graph.n, res.graph.m))
        dx_all &= res.certificate.dx and index_of(res.graph).is_zero
    controls = []
    for count in (3, 5):
        for seed in range(5):
            res = basket_jailbreak(1, rng=seed, pendants=count)
            controls.append(index_of(res.graph))
    controls_ok = all(not c.is_zero for c in controls)
    ok = dx_all and shapes == {(13, 15)} and controls_ok
    report(
        "AC5 basket jailbreak",
        ok,
        f"20/20 random 4-pendant placements DX={dx_all}, shapes {sorted(shapes)}; "
        f"3/5-pendant controls indices {sorted({str(c) for c in controls})}",
    )


def test_ac6_dx_embedding():
    rng = random.Random(606)
    inputs = [(f"random#{i}", random_connected(rng, rng.randint(2, 9))) for i in range(25)]
    inputs += [
        ("grid(5,5)", grid(5, 5)),
        ("Q4", hypercube(4)),
        ("K3+3K1", join(complete(3), empty(3))),
        ("P3 u K2", disjoint_union(path(3), complete(2))),
    ]
    failures = []
    for name, g in inputs:
        res = algorithm1_embed(g)
        finite_connected = is_connected(g) and not index_of(g).is_infinite
        if not index_of(res.graph).is_zero:
            failures.append(f"{name}: index {index_of(res.graph)}")
        if not res.embedding.induced:
            failures.append(f"{name}: not induced")
        if finite_connected and not res.embedding.isometric:
            failures.append(f"{name}: not isometric")
    report("AC6 DX embedding", not failures, f"{len(inputs) - len(failures)}/{len(inputs)} inputs DX, induced, isometric where required; {failures}")


def test_ac7_rational_realization():
    fixed = [Fraction(s) for s in ("-7/3", "-1/2", "0", "1/3", "1", "4", "22/7")]
    rng = random.Random(707)
    randoms = [Fraction(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(20)]
    bad = [q for q in fixed + randoms if index_of(realize_rational_index(q).graph).value != q]
    report("AC7 rational realization", not bad, f"{len(fixed) + len(randoms) - len(bad)}/{len(fixed) + len(randoms)} targets exact; mismatches {bad}")


def test_ac8_representation_consistency():
    rng = random.Random(808)
    graphs: list[Graph] = []
    while len(graphs) < 50:
        g = random_connected(rng, rng.randint(2, 10))
        if not is_distance_exceptional(g)[0]:
            graphs.append(g)
    exact_bad = spectral_bad = 0
    worst = 0.0
    for g in graphs:
        exact = index_of(g)
        if index_via_pseudoinverse(g) != exact:
            exact_bad += 1
        chk = spectral_cross_check(g, tol=SPECTRAL_TOL)
        if exact.is_infinite:
            err = abs(chk.reciprocal_sum)
        else:
            err = abs(chk.approx_index - float(exact.value))
        worst = max(worst, err)
        spectral_bad += chk.verdict != "agree" or err > SPECTRAL_TOL
    ok = exact_bad == 0 and spectral_bad == 0
    report(
        "AC8 representation consistency",
        ok,
        f"50 non-DX graphs: pseudoinverse mismatches {exact_bad}, spectral disagreements {spectral_bad}, worst error {worst:.2e} (tol {SPECTRAL_TOL:g})",
    )


def test_ac9_gnp_harness():
    a = gnp_experiment(GNP_N, GNP_P, GNP_TRIALS, GNP_SEED, jobs=1)
    b = gnp_experiment(GNP_N, GNP_P, GNP_TRIALS, GNP_SEED, jobs=2)
    same = a.to_json() == b.to_json()
    ok = same and a.diam2_fraction >= GNP_DIAM2_MIN
    report(
        "AC9 G(n,p) harness",
        ok,
        f"n={GNP_N} p={GNP_P} trials={GNP_TRIALS} seed={GNP_SEED}: byte-identical={same}, diam2_fraction={a.diam2_fraction:.3f} "
        f"(min {GNP_DIAM2_MIN}), median index {a.median:.4f} vs 2-p={float(2 - GNP_P)}, within 0.1: {a.near_target_fraction:.2f}, "
        f"discarded {a.discarded}",
    )


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_ac") and "extended" not in name:
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
