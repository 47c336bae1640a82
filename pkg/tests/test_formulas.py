from fractions import Fraction

import pytest

from curvex.errors import InvalidParameter
from curvex.graph import complete_multipartite, family
from curvex.index import (
    basket_index,
    family_cases,
    family_index_formula,
    index_of,
    join_branch,
    multipartite_index,
    predict_join,
    verify_families,
)
from curvex.index.verify import partitions
from curvex.values import INFINITE, IndexValue

V = IndexValue.finite


def test_verify_families_all_agree():
    checks = verify_families(kmax=9, seed=0)
    bad = [c.to_dict() for c in checks if not c.ok]
    assert not bad
    assert {c.family for c in checks} >= {"tree", "cycle", "hypercube", "grid", "complete", "complete_multipartite", "basket"}


def test_cases_cover_special_multipartite_branches():
    parts = {p for name, p in family_cases() if name == "complete_multipartite"}
    assert (1, 1, 4) in parts  # sum a/(a-2) = 0
    assert any(2 in p for p in parts)
    assert str(multipartite_index(1, 1, 4)) == "inf"
    assert index_of(complete_multipartite(1, 1, 4)).is_infinite


def test_partitions_count():
    # p(9) = 30
    assert len(list(partitions(9))) == 30


@pytest.mark.parametrize("k, expected", [(3, -2), (4, 12), (5, -28), (6, 94)])
def test_basket_formula_values(k, expected):
    assert basket_index(k).value == expected


@pytest.mark.parametrize("name, params", [c for c in family_cases(6)])
def test_formula_matches_direct(name, params):
    assert family_index_formula(name, *params) == index_of(family(name, *params))


def test_unknown_family_formula():
    with pytest.raises(InvalidParameter):
        family_index_formula("petersen")


class TestJoinTable:
    def test_branches(self):
        f = Fraction
        assert join_branch(V(f(1, 2)), V(f(4, 3))) == 1
        assert join_branch(V(1), V(1)) == 2
        assert join_branch(V(f(1, 2)), V(f(3, 2))) == 3
        assert join_branch(INFINITE, V(f(1, 2))) == 4
        assert join_branch(V(f(1, 2)), INFINITE) == 5
        assert join_branch(INFINITE, INFINITE) == 6

    def test_values(self):
        assert predict_join(V(1), V(1)) == V(1)
        assert predict_join(V(Fraction(1, 2)), V(Fraction(3, 2))).is_infinite
        assert predict_join(INFINITE, V(Fraction(2, 3))) == V(Fraction(2, 3))
        assert predict_join(INFINITE, INFINITE).is_infinite
        # K_1 + K_1 = K_2
        assert predict_join(V(0), V(0)) == V(Fraction(1, 2))
