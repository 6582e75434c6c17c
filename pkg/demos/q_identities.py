"""The q-series identities behind the twists, checked order by order in t.

Run with ``python demos/q_identities.py``.
"""

from twistforge.expr import evaluate
from twistforge.qgroups import quantum_group
from twistforge.twists import identity_suite


def main():
    for r in identity_suite().results:
        rep = r.to_json()
        print(f"{rep['identity']:<24} t^0..t^{rep['t_order']}: {rep['residual_terms']}  pass={rep['pass']}")

    # the same objects are reachable from the expression language
    sl2 = quantum_group("A", 1)
    W = evaluate("qexp(q^2; t/(1-q^2); e1)", sl2.hopf, 3)
    print("exp_{q^2}(t e/(1-q^2)) at t^2:", W.coeff(2))


if __name__ == "__main__":
    main()
