import pytest
from hypothesis import given
from hypothesis import strategies as st

from sylvmon.qpoly import InexactDivision, QPoly, from_exponents

polys = st.lists(st.integers(-5, 5), max_size=6).map(QPoly)


def test_printing():
    assert str(QPoly([0, 1, 1])) == "q + q^2"
    assert str(QPoly([0, 0, 0, 2])) == "2*q^3"
    assert str(QPoly()) == "0"
    assert QPoly([1, 2, 0, 0]).to_json() == [1, 2]


def test_q_numbers():
    assert QPoly.q_integer(3) == QPoly([1, 1, 1])
    assert QPoly.q_factorial(3) == QPoly([1, 2, 2, 1])
    assert QPoly.q_factorial(4)(1) == 24
    assert QPoly.q_pochhammer(2) == QPoly([1, -1, -1, 1])
    assert from_exponents([1, 2, 2]) == QPoly([0, 1, 2])


def test_exact_division():
    assert (QPoly.q_factorial(4).exact_div(QPoly.q_integer(4))) == QPoly.q_factorial(3)
    with pytest.raises(InexactDivision):
        QPoly([1, 0, 1]).exact_div(QPoly([1, 1]))


@given(polys, polys, st.integers(-3, 3))
def test_ring_laws_under_evaluation(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)


@given(polys, polys)
def test_divmod_reconstructs(a, b):
    if b.is_zero() or abs(b.coeffs[-1]) != 1:
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree
