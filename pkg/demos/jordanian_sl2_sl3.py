"""Jordanian twists of U_q(sl2) and U_q(sl3), from the q-exponential to q = 1.

Run with ``python demos/jordanian_sl2_sl3.py``.
"""

from fractions import Fraction

from twistforge.hopf import tensor
from twistforge.qgroups import NotRegular, classical_algebra, quantum_group, specialize_element
from twistforge.twists import cocycle_check, jordanian_twist, specialize_twist
from twistforge.twists.jordanian import (
    a1_literal,
    closed_formula_check,
    compare_series,
    jordanian_W,
    semiclassical_r_check,
)


def show(title, series, upto=2):
    print(f"-- {title}")
    for n in range(upto + 1):
        print(f"  t^{n}: {series.coeff(n)}")


def main():
    sl2 = quantum_group("A", 1)
    J = jordanian_twist("A", 1, 3)
    show("J(e) in U_q(sl2)", J.series)
    print("cocycle through t^3:", cocycle_check(J, 3).to_json()["residual_terms"])

    # W itself has a pole at q = 1; only the twist built from it is regular
    try:
        specialize_element(jordanian_W(sl2, 2), classical_algebra("A", 1))
    except NotRegular as exc:
        print("W alone:", exc)

    U = classical_algebra("A", 1)
    Jb = specialize_twist(J, U)
    show("J at q = 1", Jb.series)
    print("literal H(H-1)/8 term, residual per order:", compare_series(Jb.series, a1_literal(2), 2))

    rep = closed_formula_check(2, 3)
    print(f"A2 closed formula: literal {rep['literal']}, binomial reading {rep['step_2']}")

    for rank in (1, 2):
        Ur = classical_algebra("A", rank)
        Jr = specialize_twist(jordanian_twist("A", rank, 2), Ur)
        r = semiclassical_r_check(Jr, Ur).to_json()
        print(f"r-matrix A{rank}: skew={r['skew']} constant={r['constant']}")

    E, H = U.pres.gen("E12"), U.pres.gen("H1")
    print("first order is -(1/2) H (x) E:", Jb.series.coeff(1) == tensor(H, E).scale(Fraction(-1, 2)))


if __name__ == "__main__":
    main()
