import random
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from curvex.errors import Disconnected, DistanceExceptional
from curvex.graph import (
    add_pendant,
    basket,
    cartesian_product,
    coalesce,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    distance_matrix,
    empty,
    hypercube,
    join,
    parse_graph6,
    path,
    star,
)
from curvex.index import (
    certificate,
    curvature_index,
    distance_regular_index,
    index_of,
    index_via_pseudoinverse,
    is_distance_exceptional,
    modified_index,
    pendant_potential_update,
    predict_coalesce,
    predict_join,
    predict_product,
    spectral_cross_check,
    steinerberger_curvature,
    twin_quotient,
    wiener_index,
)
from curvex.values import INFINITE

from conftest import connected_graphs, graphs, random_connected, sympy_index, to_nx

F = Fraction


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=8))
def test_index_matches_sympy_oracle(g):
    assert index_of(g) == sympy_index(g)


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=9))
def test_reduction_does_not_change_index(g):
    assert curvature_index(g, reduce=True)[0] == curvature_index(g, reduce=False)[0]


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=9))
def test_witness_is_checked_potential(g):
    value, pot = curvature_index(g)
    if value.is_infinite:
        assert pot is None
        return
    d = distance_matrix(g)
    x = pot.x
    assert sum(x) == 1
    for i in range(g.n):
        assert sum(int(d[i, j]) * x[j] for j in range(g.n)) == value.value


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=9))
def test_dx_iff_all_ones_not_in_range(g):
    # float oracle: least-squares residual of D x = 1
    d = distance_matrix(g).astype(float)
    x, *_ = np.linalg.lstsq(d, np.ones(g.n), rcond=None)
    in_range = np.allclose(d @ x, 1.0, atol=1e-8)
    dx, cert = is_distance_exceptional(g)
    assert dx == (not in_range)
    assert dx == cert.dx == cert.index.is_zero


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete(5), "4/5"),
        (path(4), "3/2"),
        (cycle(5), "6/5"),
        (cycle(6), "3/2"),
        (basket(3), "-2/1"),
        (basket(4), "12/1"),
        (complete_multipartite(1, 1, 6), "-1/1"),
        (complete_multipartite(2, 3), "1/1"),
        (join(complete(2), empty(4)), "inf"),
        (join(complete(3), empty(3)), "inf"),
        (join(complete(4), empty(3)), "0/1"),
    ],
)
def test_known_indices(g, expected):
    assert str(index_of(g)) == expected


def test_disconnected_raises():
    with pytest.raises(Disconnected):
        index_of(empty(3))


def test_twin_quotient_of_multipartite():
    classes, sizes, q = twin_quotient(complete_multipartite(1, 1, 6))
    assert sorted(sizes) == [2, 6]
    assert len(q) == 2


def test_certificate_schema():
    d = certificate(parse_graph6("F~~v_")).to_dict()
    assert set(d) == {"index", "dx", "potential", "constant"}
    assert d["dx"] is True and d["constant"] == "0/1"
    inf = certificate(join(complete(2), empty(4))).to_dict()
    assert inf == {"index": "inf", "dx": False, "potential": None, "constant": None}


class TestModifiedIndex:
    def test_empty_graphs(self):
        assert str(modified_index(empty(2))) == "1/1"
        assert str(modified_index(empty(3))) == "4/3"

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_equals_index_at_diameter_two(self, g):
        if max(distance_matrix(g).max(), 0) <= 2:
            assert modified_index(g) == index_of(g)


class TestCurvature:
    def test_path(self):
        assert steinerberger_curvature(path(3)) == [F(3, 2), F(0), F(3, 2)]

    def test_star(self):
        assert steinerberger_curvature(star(3)) == [F(-4, 3), F(4, 3), F(4, 3), F(4, 3)]

    def test_dx_has_no_curvature(self):
        g = parse_graph6("F~~v_")
        assert steinerberger_curvature(g) is None
        with pytest.raises(DistanceExceptional):
            index_via_pseudoinverse(g)

    def test_infinite_index(self):
        assert index_via_pseudoinverse(join(complete(3), empty(3))) == INFINITE

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_matches_numpy_pinv(self, g):
        kappa = steinerberger_curvature(g)
        if kappa is None:
            return
        d = distance_matrix(g).astype(float)
        np.testing.assert_allclose([float(k) for k in kappa], np.linalg.pinv(d) @ np.full(g.n, g.n), atol=1e-7)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_pseudoinverse_index_agrees(self, g):
        if not is_distance_exceptional(g)[0]:
            assert index_via_pseudoinverse(g) == index_of(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=9))
def test_wiener_matches_networkx(g):
    assert wiener_index(g) == nx.wiener_index(to_nx(g))


@pytest.mark.parametrize("g", [cycle(7), cycle(8), hypercube(3), complete(5), complete_multipartite(3, 3)])
def test_distance_regular_shortcut(g):
    assert distance_regular_index(g) == index_of(g)


class TestSpectral:
    def test_k2(self):
        chk = spectral_cross_check(complete(2))
        assert chk.verdict == "agree" and abs(chk.approx_index - 0.5) < 1e-9

    def test_dx_graph(self):
        assert spectral_cross_check(parse_graph6("F~~v_")).verdict == "agree"

    def test_random_graphs_agree(self):
        rng = random.Random(5)
        for _ in range(30):
            g = random_connected(rng, rng.randint(2, 9))
            chk = spectral_cross_check(g)
            assert chk.verdict in ("agree", "inconclusive")
            if chk.exact.is_finite and not chk.exact.is_zero:
                assert chk.verdict == "agree"


class TestLaws:
    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=5), connected_graphs(max_n=4))
    def test_product(self, g, h):
        assert index_of(cartesian_product(g, h)) == predict_product(index_of(g), index_of(h))

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=7), connected_graphs(max_n=6))
    def test_coalesce(self, g, h):
        assert index_of(coalesce(g, 0, h, h.n - 1)) == predict_coalesce(index_of(g), index_of(h))

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=6), graphs(max_n=6))
    def test_join(self, g, h):
        assert index_of(join(g, h)) == predict_join(modified_index(g), modified_index(h))

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=8), connected_graphs(max_n=1))
    def test_pendant_adds_half(self, g, _):
        value, pot = curvature_index(g)
        h = add_pendant(g, g.n - 1)
        assert index_of(h) == value + F(1, 2)
        if pot is not None:
            assert pendant_potential_update(pot, g, g.n - 1).constant == value.value + F(1, 2)

    def test_infinite_coalesce_absorbs(self):
        inf = join(complete(3), empty(3))
        assert index_of(coalesce(inf, 0, path(3), 0)).is_infinite
        assert index_of(cartesian_product(inf, complete(2))).is_infinite

    def test_disjoint_union_join_branch(self):
        g = disjoint_union(complete(2), complete(1))
        assert index_of(join(g, empty(2))) == predict_join(modified_index(g), modified_index(empty(2)))
