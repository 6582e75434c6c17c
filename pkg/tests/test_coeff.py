from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistforge.coeff import (
    ONE,
    PoleAtOne,
    QConvention,
    QRatFunc,
    format_qratfunc,
    laurent_expand,
    parse_qratfunc,
    pole_order_at_one,
    q_binomial,
    q_number,
    qpow,
    ratfunc_arith,
    specialize_scalar,
)

from strategies import ratfuncs

q = qpow(1)
SYM = QConvention("symmetric", 1)


# examples

def test_q_number_symmetric_two():
    assert q_number(2, SYM) == q + qpow(-1)


def test_q_number_onesided_base_two():
    assert q_number(3, QConvention("onesided", 2)) == ONE + qpow(2) + qpow(4)


def test_q_binomial_two_one():
    assert q_binomial(2, 1, SYM) == q + qpow(-1)


def test_laurent_simple_pole():
    s = laurent_expand((ONE - q).inv(), 3)
    assert s.min_degree == -1
    assert s.coeff(-1) == -1
    assert all(s.coeff(k) == 0 for k in range(0, 4))


def test_laurent_one_over_one_minus_q2():
    # long division of 1 by -2u - u^2, then multiplied back
    s = laurent_expand((ONE - qpow(2)).inv(), 2)
    assert [s.coeff(k) for k in range(-1, 3)] == [Fraction(-1, 2), Fraction(1, 4), Fraction(-1, 8), Fraction(1, 16)]
    back = laurent_expand(ONE - qpow(2), 4) * s
    assert back.coeff(0) == 1
    assert all(back.coeff(k) == 0 for k in range(1, back.truncation_order + 1))


def test_laurent_q_inverse_is_geometric():
    s = laurent_expand(qpow(-1), 5)
    assert [s.coeff(k) for k in range(6)] == [1, -1, 1, -1, 1, -1]


def test_specialize_examples():
    assert specialize_scalar((qpow(2) - ONE) / (q - ONE)) == 2
    assert specialize_scalar(qpow(3)) == 1
    with pytest.raises(PoleAtOne):
        specialize_scalar((ONE - q).inv())


def test_ratfunc_arith_examples():
    assert ratfunc_arith(q, qpow(-1), "add") == (qpow(2) + ONE) / q
    assert ratfunc_arith(ONE - q, (ONE - q).inv(), "mul") == ONE
    assert ratfunc_arith(q - qpow(-1), None, "inv") == q / (qpow(2) - ONE)


def test_serialization_format():
    s = format_qratfunc((qpow(2) + ONE) / q)
    assert s == "(1*q^2 + 1*q^0)/(1*q^1)"
    assert parse_qratfunc(s) == (qpow(2) + ONE) / q


def test_division_by_zero_is_reported():
    with pytest.raises(Exception):
        QRatFunc(0).inv()


# properties

@given(st.integers(1, 12))
def test_symmetric_q_number_identity(n):
    assert q_number(n, SYM) * (q - qpow(-1)) == qpow(n) - qpow(-n)


@given(ratfuncs(regular=True))
def test_laurent_constant_term_is_value_at_one(f):
    s = laurent_expand(f, 3)
    assert s.min_degree >= 0 or s.is_zero()
    assert s.coeff(0) == specialize_scalar(f)
    # second route: evaluate numerator and denominator with flint
    assert s.coeff(0) == Fraction(str(f.num(1))) / Fraction(str(f.den(1)))


@given(ratfuncs(), ratfuncs())
def test_laurent_is_multiplicative(f, g):
    n = 4
    lf, lg = laurent_expand(f, n), laurent_expand(g, n)
    prod = laurent_expand(f * g, n)
    rhs = lf * lg
    for k in range(prod.min_degree, min(prod.truncation_order, rhs.truncation_order) + 1):
        assert prod.coeff(k) == rhs.coeff(k)


@pytest.mark.parametrize("m", range(9))
def test_q_binomial_is_laurent_polynomial(m):
    for n in range(m + 1):
        assert q_binomial(m, n, SYM).is_laurent()


@given(ratfuncs())
def test_serialization_round_trip(f):
    assert parse_qratfunc(format_qratfunc(f)) == f


@given(ratfuncs(regular=True))
def test_pole_order_of_regular_is_zero(f):
    assert pole_order_at_one(f) == 0
