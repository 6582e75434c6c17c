"""From the Jordanian twist of U'_q(sl3) down to the Connes-Moscovici twist.

The chain: F_q in U'_q(sl3)^J, its q = 1 limit, the pullback F1 to H1',
the gauge-equivalent F1', and the Connes-Moscovici twist itself.
Run with ``python demos/cm_chain.py``.
"""

import json

from twistforge.twists import cg, cm, cocycle_check
from twistforge.twists.core import Twist


def main():
    F = cg.fq_twist(2)
    print("F_q cocycle in U'_q(sl3)^J:", cocycle_check(F, 2).to_json()["residual_terms"])
    print("F_q at q = 1 against iota(F1):", json.dumps(cm.fq_specialization_check(2)))

    H = cm.h1_prime()
    F1 = cm.f1_closed_form(3)
    print("F1, first order:", F1.coeff(1))
    print("F1 cocycle in H1':", cocycle_check(Twist(F1, H, "F1"), 3).to_json()["residual_terms"])

    F1p = cm.f1_prime(F1)
    print("F1', first order:", F1p.coeff(1))
    C = cm.cm_twist(3)
    print("CM twist, first order:", C.coeff(1))
    print("F1' at -2t equals the CM twist at first order:", F1p.coeff(1).scale(-2) == C.coeff(1))

    # the CM twist solves the cocycle equation with factors on the right;
    # its inverse solves the left-handed version used by cocycle_check
    print("CM twist inverse, left cocycle:", cocycle_check(Twist(C.inv(), H, "cm^-1"), 3).to_json()["residual_terms"])

    rep = cm.cm_twist_chain(2)
    print("chain failures:", rep.failures)


if __name__ == "__main__":
    main()
