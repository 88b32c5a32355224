from math import factorial

import pytest
from hypothesis import given

from sylvmon import trees as T
from sylvmon.words import format_permutation, inverse, parse_word, standardize
from conftest import BALANCED3, RIGHT2
from strategies import permutations, words

WORKED = parse_word("bacaabca")
P_TEXT = "((((. a .) a .) a .) a (((. b .) b (. c .)) c .))"
Q_TEXT = "((((. 2 .) 4 .) 5 .) 8 (((. 1 .) 6 (. 3 .)) 7 .))"


def test_worked_symbols():
    assert T.serialize_tree(T.p_symbol(WORKED), letters=True) == P_TEXT
    assert T.serialize_tree(T.q_symbol(WORKED)) == Q_TEXT
    assert T.decreasing_tree((2, 4, 5, 8, 1, 6, 3, 7)) == T.q_symbol(WORKED)
    assert T.relabel(T.q_symbol(WORKED), WORKED) == T.p_symbol(WORKED)


def test_readings_of_worked_p():
    p = T.p_symbol(WORKED)
    assert T.postfix_reading(p) == parse_word("aaabcbca")
    assert T.infix_reading(p) == parse_word("aaaabbcc")
    assert format_permutation(T.canonical_perm(T.shape(p))) == "12357684"


def test_small_insertions():
    assert T.bst_insert(None, 0) == T.Node(None, 0, None)
    assert T.bst_insert(T.Node(None, 0, None), 1) == T.Node(None, 0, T.Node(None, 1, None))
    assert T.p_symbol((5,)) == T.Node(None, 5, None)
    assert T.q_symbol((5,)) == T.Node(None, 1, None)


def test_decreasing_tree_of_321():
    t = T.decreasing_tree((3, 2, 1))
    assert T.serialize_tree(t) == "(. 3 (. 2 (. 1 .)))"
    assert T.serialize_tree(T.relabel(t, (0, 1, 2)), letters=True) == "(. c (. b (. a .)))"


def test_relabel_rejects_wrong_length():
    with pytest.raises(ValueError):
        T.relabel(T.decreasing_tree((1, 2)), (0,))


def test_canonical_perm_and_stats():
    assert T.canonical_perm(T.LEAF_SHAPE) == (1,)
    assert T.canonical_perm(T.parse_tree(BALANCED3)) == (1, 3, 2)
    stats = T.node_stats(T.right_comb(3))
    assert stats.h == (3, 2, 1) and stats.delta == (2, 1, 0)
    assert T.node_stats(T.LEAF_SHAPE) == T.NodeStats((1,), (0,))


@pytest.mark.parametrize("n", range(9))
def test_shape_enumeration(n):
    shapes = T.enumerate_shapes(n)
    assert len(shapes) == len(set(shapes)) == T.catalan(n)
    assert all(T.size(t) == n and T.is_shape(t) for t in shapes)


def test_decreasing_labelings_brute_force():
    # count permutations whose decreasing tree has the given shape
    for n in range(6):
        from itertools import permutations as iperms

        counts = {}
        for p in iperms(range(1, n + 1)):
            s = T.shape(T.decreasing_tree(p))
            counts[s] = counts.get(s, 0) + 1
        for t in T.enumerate_shapes(n):
            assert T.count_decreasing_labelings(t) == counts.get(t, 0)
        assert sum(counts.values()) == factorial(n)


def test_parse_forms():
    assert T.parse_tree("(. a .)") == T.Node(None, 0, None)
    assert T.parse_tree(".") is None
    assert T.parse_tree(P_TEXT) == T.p_symbol(WORKED)
    assert T.parse_tree("  ( .   *  ( . * . ) ) ") == T.parse_tree(RIGHT2)


@pytest.mark.parametrize("bad", ["(", "(. * .", "(. * .) x", "(. * (. a .))", "(. ? .)", ""])
def test_parse_errors_report_position(bad):
    with pytest.raises(T.TreeParseError) as info:
        T.parse_tree(bad)
    assert info.value.position >= 0


@given(words(8, 4))
def test_p_symbol_is_bst_and_postfix_reinserts(w):
    p = T.p_symbol(w)
    assert T.is_bst(p)
    assert T.infix_reading(p) == tuple(sorted(w))
    assert T.p_symbol(T.postfix_reading(p)) == p
    assert T.p_postfix(w) == T.postfix_reading(p)


@given(words(8, 4))
def test_q_symbol_is_decreasing_of_same_shape(w):
    q = T.q_symbol(w)
    assert T.is_decreasing_tree(q)
    assert T.shape(q) == T.p_shape(w)
    assert q == T.decreasing_tree(inverse(standardize(w)))


@given(permutations(8))
def test_serialization_round_trip(p):
    for t in (T.p_symbol(p), T.q_symbol(p), T.p_shape(p)):
        assert T.parse_tree(T.serialize_tree(t)) == t
        assert T.tree_from_json(T.tree_to_json(t)) == t
