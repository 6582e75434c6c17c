"""The acceptance battery: twelve criteria, each reduced to a pass flag and JSON details."""

from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import hopf_axiom_check
from .ncalg import confluence_smoke_check
from .qgroups import (
    NotRegular,
    classical_algebra,
    classical_sl3_weights,
    q_commutation_check,
    quantum_group,
    uq_prime_sl3,
)
from .twists import cg, cm, jordanian
from .twists.core import Twist, TwistedHopf, classical_recheck, cocycle_check, specialize_twist
from .twists.identities import identity_suite

IN_SCOPE = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 4))
JORDANIAN_TYPES = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2))


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"criterion {self.number:2d} [{'PASS' if self.passed else 'FAIL'}] {self.title}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "pass": self.passed, "details": self.details}


def _label(typ, rank):
    return f"{typ}{rank}"


def hopf_presentations():
    """Every Hopf presentation the battery touches, keyed by a short label."""
    out = {}
    for typ, rank in IN_SCOPE:
        out[f"Uq({_label(typ, rank)})"] = quantum_group(typ, rank).hopf
        out[f"U({_label(typ, rank)})"] = classical_algebra(typ, rank).hopf
    out["U'q(sl3)"] = uq_prime_sl3().hopf
    out["U(sl3) weight basis"] = classical_sl3_weights().hopf
    out["H1'"] = cm.h1_prime()
    out["D_q"] = cm.dq_algebra()
    out["D_1"] = cm.d1_algebra()
    return out


def criterion_1() -> CriterionResult:
    det = {}
    for name, h in hopf_presentations().items():
        fails = hopf_axiom_check(h)
        det[name] = {k: list(v) for k, v in fails.items() if v} or "ok"
    return CriterionResult(1, "Hopf axioms on all generators", all(v == "ok" for v in det.values()), det)


def criterion_2() -> CriterionResult:
    det = {}
    ok = True
    for typ, rank in IN_SCOPE:
        rep = q_commutation_check(None, quantum_group(typ, rank))
        fails = ["".join(map(str, g)) for g in rep.bracket_failures]
        det[_label(typ, rank)] = fails or "ok"
        ok &= not fails
    # the control keeps the standard generators: with its own generators any
    # A2 ordering reduces to the quantum Serre relation
    alg = quantum_group("A", 2)
    neg = q_commutation_check(alg.ordering.reversed(), alg, alg.ordering)
    det["A2 reversed ordering (negative control)"] = {
        "bracket_failures": ["".join(map(str, g)) for g in neg.bracket_failures],
        "fails_as_expected": bool(neg.bracket_failures),
    }
    ok &= bool(neg.bracket_failures)
    for typ, rank in (("B", 2), ("C", 2), ("D", 4)):
        a = quantum_group(typ, rank)
        extra = q_commutation_check(a.ordering.reversed(), a)
        det[f"{_label(typ, rank)} reversed ordering (extra control)"] = ["".join(map(str, g)) for g in extra.bracket_failures]
    return CriterionResult(2, "highest-root q-commutation for each standard ordering; reversed A2 fails", ok, det)


def criterion_3() -> CriterionResult:
    det = {}
    for typ, rank in IN_SCOPE:
        rep = q_commutation_check(None, quantum_group(typ, rank))
        det[_label(typ, rank)] = "ok" if rep.tensor_ok else f"{len(rep.tensor_residual)} residual terms"
    return CriterionResult(3, "tensor q-commutation of e_lambda", all(v == "ok" for v in det.values()), det)


def _quantum_twists(order_j: int = 4, order_cg: int = 3):
    out = {}
    for typ, rank in JORDANIAN_TYPES:
        out[f"jordanian[{_label(typ, rank)}]"] = (jordanian.jordanian_twist(typ, rank, order_j, check=False), order_j)
    out["cg_hat"] = (cg.cg_hat_twist(1, order_cg), order_cg)
    out["cg_regular"] = (cg.cg_regular_twist(order_cg, check=False), order_cg)
    out["jordanian-l1"] = (cg.jordanian_l1_twist(order_cg), order_cg)
    out["fq"] = (cg.fq_twist(order_cg), order_cg)
    return out


def criterion_4() -> CriterionResult:
    det = {}
    for name, (F, order) in _quantum_twists().items():
        det[name] = cocycle_check(F, order).to_json()
    return CriterionResult(4, "cocycle and counit conditions", all(d["pass"] for d in det.values()), det)


def criterion_5() -> CriterionResult:
    det = {}
    ok = True
    for typ, rank in JORDANIAN_TYPES:
        try:
            jordanian.jordanian_twist(typ, rank, 4, check=True)
            det[_label(typ, rank)] = "regular"
        except NotRegular as exc:
            det[_label(typ, rank)] = str(exc)
            ok = False
        w = jordanian.w_singularity(quantum_group(typ, rank), 2)
        det[f"W[{_label(typ, rank)}]"] = w
        ok &= w["not_regular"]
    return CriterionResult(5, "Jordanian twists regular, W alone singular", ok, det)


def criterion_6() -> CriterionResult:
    a2 = jordanian.closed_formula_check(2, 3)
    J = jordanian.jordanian_twist("A", 1, 2)
    Jb = specialize_twist(J, classical_algebra("A", 1)).series
    res = jordanian.compare_series(Jb, jordanian.a1_literal(2), 2)
    step2 = jordanian.compare_series(Jb, jordanian.heine_part(classical_algebra("A", 1), 2, step=2), 2)
    det = {
        "A2 closed formula (literal)": a2["literal"],
        "A2 closed formula (binom(H/2, n) reading)": a2["step_2"],
        "A1 literal H(H-1)/8": {"residual_terms": res, "pass": not any(res)},
        "A1 with H(H-2)/8": {"residual_terms": step2, "pass": not any(step2)},
    }
    ok = a2["literal"]["pass"] and not any(res)
    return CriterionResult(6, "classical closed formula of the Jordanian twists", ok, det)


def _classical_twists(order: int = 3):
    out = {}
    for typ, rank in JORDANIAN_TYPES:
        U = classical_algebra(typ, rank)
        J = jordanian.jordanian_twist(typ, rank, order, check=False)
        out[f"jordanian[{_label(typ, rank)}]"] = specialize_twist(J, U)
    U = classical_sl3_weights()
    for name, F in (("cg_hat", cg.cg_hat_twist(1, order)), ("cg_regular", cg.cg_regular_twist(order, check=False))):
        out[name] = Twist(cg.specialize_sl3(F.series), U.hopf, name + "_bar")
    Jb = Twist(cg.specialize_sl3(cg.jordanian_l1_twist(order).series), U.hopf, "jordanian_l1_bar")
    out["jordanian-l1"] = Jb
    Fq = cg.fq_twist(order)
    out["fq"] = Twist(cg.specialize_sl3(Fq.series), TwistedHopf(U.hopf, Jb), "fq_bar")
    return out


def criterion_7() -> CriterionResult:
    det = {}
    for name, Fb in _classical_twists(3).items():
        det[name] = classical_recheck(Fb, 3).to_json()
    return CriterionResult(7, "specialized twists are classical twists", all(d["pass"] for d in det.values()), det)


def criterion_8() -> CriterionResult:
    rep = identity_suite()
    return CriterionResult(8, "Heine, lattice Heine, dilog, five-term", rep.passed, rep.to_json())


def criterion_9() -> CriterionResult:
    det = {
        "coproduct of e_{1+2}L1": cg.e12l1_coproduct_check(),
        "conjugations": cg.conjugation_forms(3),
    }
    suite = cm.cm_algebra_suite(2)
    det["D_q, D_1, iota"] = suite.to_json()
    s5 = cg.jordanian_l1_classical(3)
    det["J21 differs at order 1"] = s5["J21_differs_at_order1"]
    ok = (
        det["coproduct of e_{1+2}L1"]["pass"]
        and all(v["pass"] for v in det["conjugations"].values())
        and suite.passed
        and s5["J21_differs_at_order1"]
    )
    return CriterionResult(9, "e_{1+2}L1 chain: coproduct, conjugations, D_q, D_1, iota", ok, det)


def criterion_10() -> CriterionResult:
    rep = cm.cm_twist_chain(3)
    s = rep.sections
    ok = (
        s["F_q specialization"]["literal"]["pass"]
        and s["F1' order 1"]["match"]
        and s["CM twist order 1"]["match"]
        and s["F1'(t -> -2t) vs CM twist"]["order1_match"]
    )
    return CriterionResult(10, "Connes-Moscovici chain", ok, rep.to_json())


def criterion_11() -> CriterionResult:
    det = {}
    ok = True
    for rank in (1, 2):
        U = classical_algebra("A", rank)
        runs = []
        for _ in range(2):
            J = jordanian.jordanian_twist("A", rank, 2, check=False)
            runs.append(jordanian.semiclassical_r_check(specialize_twist(J, U), U).to_json())
        stable = runs[0] == runs[1]
        det[f"A{rank}"] = dict(runs[0], stable=stable)
        ok &= runs[0]["pass"] and stable
    return CriterionResult(11, "semiclassical r-matrix", ok, det)


def criterion_12(trials: int = 200, seed: int = 0) -> CriterionResult:
    det = {}
    ok = True
    for name, h in hopf_presentations().items():
        rep = confluence_smoke_check(h.pres, 5, trials, seed)
        det[name] = len(rep.divergences)
        ok &= rep.passed
    from .cli import render_report

    rep_a = render_report({"check": criterion_11().to_json()})
    rep_b = render_report({"check": criterion_11().to_json()})
    det["byte_identical_reports"] = rep_a == rep_b
    ok &= rep_a == rep_b
    return CriterionResult(12, "confluence smoke checks and deterministic reports", ok, det)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
    12: criterion_12,
}


def run_suite(numbers=None) -> list:
    """Run the given criteria (all of them when ``numbers`` is None)."""
    return [CRITERIA[n]() for n in (sorted(CRITERIA) if numbers is None else numbers)]


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def suite_report(results) -> dict:
    return _jsonable({"suite": "acceptance", "pass": all(r.passed for r in results), "results": [r.to_json() for r in results]})

