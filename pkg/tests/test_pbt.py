from collections import Counter

import pytest
from hypothesis import given, strategies as st

from sylvmon import fqsym as Fq
from sylvmon import pbt
from sylvmon import trees as T
from sylvmon.fqsym import F, G, FQSymElement
from sylvmon.pbt import P, Q
from sylvmon.sylvester import permutation_class
from sylvmon.words import shifted_shuffle
from sylvmon.words import all_permutations
from conftest import BALANCED3, LEFT2, LEFT3, RIGHT2, SINGLE, TREE231

t = T.parse_tree
DOT = T.LEAF_SHAPE


def shapes_upto(n):
    return st.integers(0, n).flatmap(lambda k: st.sampled_from(T.enumerate_shapes(k)))


def test_p_to_f_examples():
    assert pbt.p_to_f(DOT) == F(1)
    assert pbt.p_to_f(t(BALANCED3)) == F(1, 3, 2) + F(3, 1, 2)
    assert pbt.p_to_f(t(LEFT3)) == F(1, 2, 3)
    assert pbt.f_to_p(F(1, 3, 2) + F(3, 1, 2)) == P(t(BALANCED3))


def test_f_to_p_rejects_partial_class():
    with pytest.raises(pbt.NotPExpressible):
        pbt.f_to_p(F(1, 3, 2))


def test_p_products():
    assert pbt.p_product(DOT, DOT) == P(t(LEFT2)) + P(t(RIGHT2))
    assert pbt.p_product(t(LEFT2), DOT) == P(t(LEFT3)) + P(t(BALANCED3))
    assert pbt.p_product(None, t(TREE231)) == P(t(TREE231))


def test_p_coproducts():
    assert pbt.p_coproduct(DOT) == Fq.TensorElement(("P", "P"), {(None, DOT): 1, (DOT, None): 1})
    r = t(RIGHT2)
    assert pbt.p_coproduct(r) == Fq.TensorElement(("P", "P"), {(None, r): 1, (DOT, DOT): 1, (r, None): 1})
    cop = dict(pbt.p_coproduct(t(BALANCED3)).items())
    for side in (t(LEFT2), t(RIGHT2)):
        assert cop[(DOT, side)] == 1 and cop[(side, DOT)] == 1
    assert len(cop) == 6


def test_projection_examples():
    assert pbt.pi_project((2, 0, 1), 3) == pbt.pi_project((0, 2, 1), 3)
    assert str(pbt.pi_project((2, 0, 1), 3)) == "[((. a .) b (. c .))]"
    assert str(pbt.pi_project(FQSymElement("G", {(1, 2): 1}), 2)) == "[((. a .) a .)] + [((. a .) b .)] + [((. b .) b .)]"
    assert dict(pbt.pi_project((), 1).items()) == {None: 1}


def test_q_products():
    assert pbt.q_dual_product(DOT, DOT) == Q(t(LEFT2)) + Q(t(RIGHT2))
    assert pbt.q_dual_product(t(LEFT2), DOT) == Q(t(LEFT3)) + Q(t(BALANCED3)) + Q(t(TREE231))
    assert pbt.q_dual_product(None, t(BALANCED3)) == Q(t(BALANCED3))


@pytest.mark.parametrize("n", range(1, 5))
def test_projection_identification_matches_bst_oracle(n):
    # the fast identification keys by tree-words; the oracle builds every BST
    for sigma in all_permutations(n):
        img = pbt.pi_project(FQSymElement("G", {sigma: 1}), n)
        assert img == pbt.q_realization(pbt.identify_q(sigma, n), n)
        assert pbt.identify_q(sigma, n) == T.p_shape(sigma)


def test_duality_examples():
    bal = P(t(BALANCED3))
    assert pbt.pbt_pairing(bal, Q(t(BALANCED3))) == 1
    assert Fq.pairing(pbt.p_element_to_f(bal), G(1, 3, 2)) == 1
    assert Fq.pairing(pbt.p_element_to_f(bal), G(1, 2, 3)) == 0
    for n in range(5):
        assert pbt.duality_check(n)


@given(shapes_upto(3), shapes_upto(2))
def test_q_product_agrees_with_transpose(a, b):
    assert pbt.q_dual_product(a, b) == pbt.q_product_by_transpose(a, b)


@given(shapes_upto(3), shapes_upto(3))
def test_shuffle_rule_agrees_with_fqsym(a, b):
    assert pbt.p_product(a, b) == pbt.p_product_via_fqsym(a, b)


def test_product_of_full_classes_is_union_of_classes():
    # the shifted shuffle of two whole classes is a disjoint union of whole classes
    for n in range(6):
        for k in range(n + 1):
            for a in T.enumerate_shapes(k):
                for b in T.enumerate_shapes(n - k):
                    total = Counter()
                    for u in permutation_class(a):
                        for v in permutation_class(b):
                            total.update(shifted_shuffle(u, v))
                    sh = pbt.sh_set(a, b)
                    want = Counter(p for s in sh for p in permutation_class(s))
                    assert total == want


def test_weak_order_examples():
    assert pbt.weak_order_leq((1, 3, 2), (3, 1, 2))
    assert pbt.weak_order_leq((1, 2, 3), (3, 2, 1))
    assert not pbt.weak_order_leq((2, 1, 3), (1, 3, 2))
    assert all(pbt.weak_order_leq((1, 2, 3, 4), s) for s in all_permutations(4))
    with pytest.raises(ValueError):
        pbt.weak_order_leq((1,), (1, 2))


def test_intervals():
    lo, hi = pbt.class_interval(t(BALANCED3))
    assert (lo, hi) == ((1, 3, 2), (3, 1, 2))
    assert pbt.weak_interval(lo, hi) == {(1, 3, 2), (3, 1, 2)}
    assert pbt.sh_interval(t(LEFT2), DOT) == (t(LEFT3), t(BALANCED3))
    assert pbt.class_interval(T.left_comb(4)) == ((1, 2, 3, 4), (1, 2, 3, 4))


@pytest.mark.parametrize("n", range(6))
def test_classes_are_weak_intervals(n):
    for s in T.enumerate_shapes(n):
        lo, hi = pbt.class_interval(s)
        assert pbt.weak_interval(lo, hi) == set(permutation_class(s))


def test_exact_rank_of_q_realizations():
    for n in range(1, 5):
        assert pbt.exact_rank(pbt.q_realization(s, n) for s in T.enumerate_shapes(n)) == T.catalan(n)


def test_monoid_element_validation():
    with pytest.raises(ValueError):
        pbt.MonoidAlgebraElement(2, {T.p_symbol((0, 5)): 1})


def test_q_coproduct_is_transpose():
    cop = pbt.q_coproduct(t(BALANCED3))
    assert dict(cop.items()) == {(None, t(BALANCED3)): 1, (DOT, t(RIGHT2)): 1, (t(LEFT2), DOT): 1, (t(BALANCED3), None): 1}
