from math import factorial

import pytest

from sylvmon import graphs as Gr
from sylvmon import trees as T
from sylvmon.sylvester import class_size
from conftest import BALANCED3, LEFT2, LEFT3, RIGHT2, TREE231

t = T.parse_tree
DOT = T.LEAF_SHAPE


@pytest.fixture(scope="module")
def pair():
    return Gr.build_gamma(5), Gr.build_gamma_star(5)


def test_small_edges():
    assert Gr.gamma_edges(0) == {(None, DOT)}
    assert Gr.gamma_edges(1) == {(DOT, t(LEFT2)), (DOT, t(RIGHT2))}
    assert Gr.gamma_star_edges(0) == {(None, DOT)}
    assert Gr.gamma_star_edges(1) == {(DOT, t(LEFT2)), (DOT, t(RIGHT2))}
    ups = {b for a, b in Gr.gamma_star_edges(2) if a == t(LEFT2)}
    assert ups == {t(LEFT3), t(BALANCED3), t(TREE231)}


def test_level_two_degrees(pair):
    g, _ = pair
    from sylvmon.pbt import sh_set

    assert sum(len(g.up(s)) for s in g.levels[2]) == len(Gr.gamma_edges(2)) == sum(
        len(sh_set(s, DOT)) for s in T.enumerate_shapes(2)
    )


def test_grading(pair):
    for g in pair:
        assert Gr.edges_respect_grading(g)
        assert Gr.level_sizes(g) == [T.catalan(n) for n in range(6)]


def test_commutator_low_levels(pair):
    g, gs = pair
    assert Gr.commutator_defect(g, gs, None) == {}
    assert Gr.commutator_defect(g, gs, DOT) == {}


def test_duality_both_orientations(pair):
    g, gs = pair
    res = Gr.fomin_duality_check(4, g, gs)
    assert res and res.orientation == "Gamma-up/Gamma*-down"
    assert set(res.passing_orientations) == set(Gr.ORIENTATIONS)


@pytest.mark.parametrize("n", range(6))
def test_path_counts(pair, n):
    counts = Gr.path_counts(n, *pair)
    assert Gr.path_identity_holds(n, counts)
    assert sum(a * b for a, b in counts.values()) == factorial(n)
    for s, (f, fs) in counts.items():
        assert f == 1
        assert fs == class_size(s) == T.count_decreasing_labelings(s)


def test_path_counts_level_three(pair):
    counts = Gr.path_counts(3, *pair)
    assert sum(a * b for a, b in counts.values()) == 6


def test_json_shape(pair):
    data = pair[0].to_json()
    assert data["name"] == "Gamma"
    assert data["adjacency"]["."] == ["(. * .)"]
