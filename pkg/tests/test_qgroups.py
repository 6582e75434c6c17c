import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistforge.coeff import ONE, qpow
from twistforge.hopf import coproduct, tensor
from twistforge.qgroups import (
    NotRegular,
    build_root_system,
    classical_algebra,
    classical_sl3_weights,
    composite_generator,
    integral_membership,
    is_normal,
    ls_violations,
    standard_normal_ordering,
    q_commutation_check,
    quantum_group,
    specialize_element,
    uq_prime_sl3,
)
from twistforge.twists import jordanian_twist, specialize_twist

q = qpow(1)
IN_SCOPE = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 4)]


@pytest.mark.parametrize("typ,rank,count", [("A", 2, 3), ("B", 2, 4), ("D", 4, 12), ("A", 3, 6), ("C", 2, 4)])
def test_positive_root_counts(typ, rank, count):
    assert len(build_root_system(typ, rank).positive_roots) == count


def test_a2_highest_root():
    assert build_root_system("A", 2).highest_root == (1, 1)


def test_standard_orderings():
    assert standard_normal_ordering(build_root_system("A", 2)).roots == ((1, 0), (1, 1), (0, 1))
    # alpha < 2alpha + beta < alpha + beta < beta
    assert standard_normal_ordering(build_root_system("C", 2)).roots == ((1, 0), (2, 1), (1, 1), (0, 1))


@pytest.mark.parametrize("typ,rank", IN_SCOPE)
def test_orderings_are_normal(typ, rank):
    rs = build_root_system(typ, rank)
    assert is_normal(rs, standard_normal_ordering(rs))


def test_composite_generators_a2():
    alg = quantum_group("A", 2)
    e1, e2 = alg.pres.gen("e1"), alg.pres.gen("e2")
    assert composite_generator((1, 1), alg.ordering, alg) == e1 * e2 - (e2 * e1).scale(q)
    assert composite_generator((1, 0), alg.ordering, alg) == e1


@pytest.mark.parametrize("typ,rank", IN_SCOPE)
def test_composite_generators_are_homogeneous(typ, rank):
    alg = quantum_group(typ, rank)
    for gamma in alg.ordering.roots:
        assert composite_generator(gamma, alg.ordering, alg).gradings() == {gamma}


@pytest.mark.parametrize("typ,rank", [("A", 2), ("B", 2)])
def test_q_commutation_standard_ordering(typ, rank):
    rep = q_commutation_check(None, quantum_group(typ, rank))
    assert rep.passed


def test_reversed_a2_ordering_fails_with_standard_generators():
    alg = quantum_group("A", 2)
    rep = q_commutation_check(alg.ordering.reversed(), alg, alg.ordering)
    assert rep.bracket_failures


@pytest.mark.parametrize("typ,rank", IN_SCOPE)
def test_commutators_stay_in_the_interval(typ, rank):
    assert ls_violations(quantum_group(typ, rank)) == []


def test_integral_membership_examples():
    p = quantum_group("A", 1).pres
    ki = p.gen("k1", -1)
    D = (p.gen("k1") - p.one()).scale((q - ONE).inv())
    x = (ki - p.one()).scale((q - ONE).inv())
    assert x == -(ki * D)
    assert integral_membership(x).member
    assert not integral_membership(p.gen("e1").scale((q - ONE).inv())).member


def test_composite_coproduct_is_divisible():
    alg = quantum_group("A", 2)
    p = alg.pres
    e12 = p.gen("e_11")
    r = coproduct(e12, alg.hopf) - tensor(p.cartan_monomial({"k1": -1, "k2": -1}), e12) - tensor(e12, p.one())
    r = r.scale((q - qpow(-1)).inv())
    assert r == tensor(p.gen("e1") * p.gen("k2", -1), p.gen("e2")).scale(-q)
    assert integral_membership(r, "plus-subalgebra").member


@pytest.mark.parametrize("typ,rank", IN_SCOPE)
def test_composite_coproducts_are_regular(typ, rank):
    alg = quantum_group(typ, rank)
    for gamma in alg.ordering.roots:
        assert integral_membership(coproduct(alg.e(gamma), alg.hopf)).member


def test_specialization_examples():
    U = uq_prime_sl3()
    p = U.pres
    x = (p.gen("L1") - p.one()).scale((q - ONE).inv())
    W = classical_sl3_weights()
    assert specialize_element(x, W) == W.pres.gen("hw1")
    A1 = quantum_group("A", 1)
    U1 = classical_algebra("A", 1)
    assert specialize_element(A1.pres.gen("k1", -1), U1) == U1.pres.one()


def test_specialization_rejects_poles():
    p = quantum_group("A", 1).pres
    with pytest.raises(NotRegular):
        specialize_element(p.gen("e1").scale((q - ONE).inv()), classical_algebra("A", 1))


def test_jordanian_sl2_first_order_specialization():
    U = classical_algebra("A", 1)
    Jb = specialize_twist(jordanian_twist("A", 1, 1), U).series
    H, E = U.pres.gen("H1"), U.pres.gen("E12")
    assert Jb.coeff(0) == tensor(U.pres.one(), U.pres.one())
    assert Jb.coeff(1) == tensor(H, E).scale(Fraction(-1, 2))


def _regular_atoms(alg):
    p = alg.pres
    out = [p.gen(l.name) for l in p.letters]
    for c in p.cartan:
        k = p.gen(c.name)
        out += [p.gen(c.name, -1), (k - p.one()).scale((q - ONE).inv())]
    return out


@given(st.sampled_from([("A", 1), ("A", 2)]), st.integers(0, 10**6))
def test_specialization_is_multiplicative(tr, seed):
    alg = quantum_group(*tr)
    U = classical_algebra(*tr)
    rng = random.Random(seed)
    atoms = _regular_atoms(alg)
    x = rng.choice(atoms) * rng.choice(atoms)
    y = rng.choice(atoms) + rng.choice(atoms).scale(qpow(rng.randint(-2, 2)))
    assert specialize_element(x * y, U) == specialize_element(x, U) * specialize_element(y, U)
