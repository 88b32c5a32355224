from itertools import product as iproduct

import pytest
from hypothesis import given

from sylvmon import fqsym as Fq
from sylvmon.fqsym import F, G, FQSymElement
from sylvmon.qpoly import QPoly
from sylvmon.words import all_permutations, all_words, descents, inverse, standardize
from strategies import permutations


def realization_brute(basis, sigma, m):
    """Sum of all words over m letters whose standardization matches."""
    target = inverse(sigma) if basis == "F" else sigma
    return {w for w in all_words(len(sigma), m) if standardize(w) == target}


def test_f_products():
    assert Fq.f_product((1,), (1,)) == F(1, 2) + F(2, 1)
    assert Fq.f_product((1, 2), (1,)) == F(1, 2, 3) + F(1, 3, 2) + F(3, 1, 2)
    assert Fq.f_product((2, 3, 1), ()) == F(2, 3, 1)


def test_g_products():
    assert Fq.g_product((1,), (1,)) == G(1, 2) + G(2, 1)
    assert Fq.g_product((1, 2), (1,)) == G(1, 2, 3) + G(1, 3, 2) + G(2, 3, 1)
    assert Fq.g_product((2, 1), ()) == G(2, 1)


def test_coproducts():
    e = ()
    assert Fq.f_coproduct((1,)) == Fq.TensorElement(("F", "F"), {(e, (1,)): 1, ((1,), e): 1})
    assert Fq.f_coproduct((2, 1)) == Fq.TensorElement(
        ("F", "F"), {(e, (2, 1)): 1, ((1,), (1,)): 1, ((2, 1), e): 1}
    )
    assert str(Fq.f_coproduct((1, 3, 2))) == "F[ε] (x) F[132] + F[1] (x) F[21] + F[12] (x) F[1] + F[132] (x) F[ε]"


def test_pairing():
    assert Fq.pairing(F(1, 3, 2), G(1, 3, 2)) == 1
    assert Fq.pairing(F(1, 3, 2), G(3, 1, 2)) == 0
    assert Fq.pairing(F(1) * F(1), G(1, 2)) == 1
    assert Fq.pairing(FQSymElement("F", {}), G(1)) == 0


def test_expansions():
    assert str(Fq.expand_polynomial(F(1), 2)) == "a + b"
    assert str(Fq.expand_polynomial(F(2, 1), 2)) == "ba"
    assert str(Fq.expand_polynomial(F(1, 2), 2)) == "aa + ab + bb"


def test_basis_change_round_trip():
    x = F(1, 3, 2) + 3 * F(2, 3, 1)
    assert Fq.to_basis(Fq.to_basis(x, "G"), "F") == x
    assert Fq.to_basis(F(2, 3, 1), "G") == G(3, 1, 2)


@pytest.mark.parametrize("n", range(5))
def test_words_with_std_matches_filtering(n):
    for m in range(1, 5):
        for p in all_permutations(n):
            assert Fq.words_with_std(p, m) == Fq.words_with_std_by_filtering(p, m)


@given(permutations(3), permutations(3))
def test_g_product_transport_matches_convolution(s, t):
    assert Fq.g_product(s, t) == Fq.g_product_convolution(s, t)


@given(permutations(3), permutations(2))
def test_f_product_is_polynomial_product(s, t):
    m = 4
    lhs = Fq.expand_polynomial(Fq.f_product(s, t), m)
    left = realization_brute("F", s, m)
    right = realization_brute("F", t, m)
    want = {}
    for u, v in iproduct(left, right):
        want[u + v] = want.get(u + v, 0) + 1
    assert dict(lhs.items()) == want


@given(permutations(3), permutations(2), permutations(2))
def test_associativity(a, b, c):
    x, y, z = F(*a), F(*b), F(*c)
    assert (x * y) * z == x * (y * z)


@given(permutations(3), permutations(2))
def test_coproduct_is_multiplicative(s, t):
    lhs = Fq.coproduct(Fq.f_product(s, t))
    rhs = Fq.f_coproduct(s) * Fq.f_coproduct(t)
    assert lhs == rhs


def test_principal_specialization_examples():
    assert Fq.principal_specialization(F(1)) == QPoly([1])
    assert Fq.principal_specialization(F(2, 1)) == QPoly.monomial(1)
    assert Fq.principal_specialization(F(1, 3, 2) + F(3, 1, 2)) == QPoly([0, 1, 1])


@pytest.mark.parametrize("n", range(5))
def test_principal_specialization_is_comaj(n):
    # (q)_n F_s(1,q,...) = q^comaj(s), comaj summing n-i over descents i
    for s in all_permutations(n):
        comaj = sum(n - i for i in descents(s))
        assert Fq.principal_specialization(F(*s)) == QPoly.monomial(comaj)


@pytest.mark.parametrize("n", range(4))
def test_cauchy(n):
    assert Fq.cauchy_check(n, 3)
    assert Fq.cauchy_check(n, 3, ("G", "F"))


def test_json_round_trip():
    x = F(1, 3, 2) - 2 * F(2, 1)
    assert FQSymElement.from_json(x.to_json()) == x
