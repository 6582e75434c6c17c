from fractions import Fraction

import pytest

from twistforge.hopf import hopf_axiom_check, tensor
from twistforge.twists import cm, cocycle_check
from twistforge.twists.core import Twist

H = cm.h1_prime()
P = H.pres
X, Y, Z = P.gen("X"), P.gen("Y"), P.gen("Z")


@pytest.mark.parametrize("make", [cm.h1_prime, cm.dq_algebra, cm.d1_algebra], ids=["H1'", "D_q", "D_1"])
def test_hopf_axioms(make):
    assert not any(hopf_axiom_check(make()).values())


def test_h1_relations():
    assert Y * X - X * Y == X
    assert Z * X - X * Z == (Z * Z).scale(Fraction(-1, 2))
    assert Y * Z - Z * Y == Z


def test_dq_relations_in_sl3():
    rep = cm.dq_in_sl3(2)
    assert all(not any(v) for v in rep.values()), rep


def test_d1_relations_in_sl3():
    rep = cm.d1_in_sl3(2)
    good = rep["q^2-1"]
    assert all(not any(v) for k, v in good.items() if k != "Delta(x) literal (-t)")
    assert any(good["Delta(x) literal (-t)"])
    # the other normalization keeps the literal coproduct but breaks [y,x] = x
    other = rep["q-1"]
    assert not any(other["Delta(x) literal (-t)"]) and any(other["[y,x] = x"])


def test_iota_is_hopf_map():
    assert not any(cm.hopf_map_check(H, cm.d1_algebra(), cm.iota_images()).values())


def test_iota_bracket_in_sl3():
    rep = cm.iota_in_sl3(2)
    assert not any(rep["[Y,X] = X"])


def test_dq_specializes_to_d1():
    assert all(cm.dq_specializes_to_d1().values())


def test_pbw_words_independent():
    rep = cm.pbw_independence(3)
    assert rep["independent"] and rep["rank"] == rep["monomials"]


def test_f1_first_order():
    F1 = cm.f1_closed_form(2)
    assert F1.coeff(1) == tensor(X, Y).scale(2) + tensor(Z, Y * Y)


def test_f1_is_twist_in_h1():
    assert cocycle_check(Twist(cm.f1_closed_form(3), H, "F1"), 3).passed


def test_f1_prime_first_order_computed():
    F1p = cm.f1_prime(cm.f1_closed_form(2))
    assert F1p.coeff(1) == tensor(X, Y) - tensor(Y, X) - tensor(Z * Y, Y)


@pytest.mark.xfail(strict=True, reason="literal sign of the ZY (x) Y term")
def test_f1_prime_first_order_literal():
    F1p = cm.f1_prime(cm.f1_closed_form(2))
    assert F1p.coeff(1) == tensor(X, Y) - tensor(Y, X) + tensor(Z * Y, Y)


def test_cm_twist_first_order():
    E3 = cm.cm_twist(2)
    assert E3.coeff(1) == (tensor(Y, X) - tensor(X, Y) + tensor(Z * Y, Y)).scale(2)


def test_f1_prime_rescaled_matches_cm_twist_at_first_order():
    F1p = cm.f1_prime(cm.f1_closed_form(2))
    assert F1p.coeff(1).scale(-2) == cm.cm_twist(2).coeff(1)


def test_cm_twist_inverse_satisfies_left_cocycle():
    E3 = cm.cm_twist(2)
    assert cocycle_check(Twist(E3.inv(), H, "cmt^-1"), 2).passed


def test_fq_specialization():
    rep = cm.fq_specialization_check(2)
    assert rep["Y-1"]["pass"]
    assert not rep["literal"]["pass"] and rep["literal"]["residual_terms"][:2] == [0, 0]
