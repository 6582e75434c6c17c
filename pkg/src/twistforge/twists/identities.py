"""q-series identities behind the twist constructions, checked as exact t-series identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..coeff import ONE, QConvention, QRatFunc, q_factorial, q_number, qpow
from ..hopf import TensorPoly, TSeries, exp_series, q_exp_series, series_from_terms
from ..ncalg import free_algebra
from ..qgroups.uq import quantum_group
from .cg import IdentityResult, five_term_check, five_term_commuting


def _symbol():
    p = free_algebra(["x"], "Q<x>")
    return p, p.gen("x")


def heine_check(alpha: int, order: int = 6, base: int = 1) -> IdentityResult:
    """1 + sum t^n (alpha)_Q...(alpha+n-1)_Q/(n)_Q! x^n = exp_Q(t x/(1-Q)) exp_{Q^-1}(-Q^alpha t x/(1-Q)), Q = q^base."""
    _, x = _symbol()
    conv = QConvention("onesided", base)
    weights = [ONE]
    num = ONE
    for n in range(1, order + 1):
        num = num * q_number(alpha + n - 1, conv)
        weights.append(num / q_factorial(n, conv))
    lhs = series_from_terms(x, weights, order)
    c = (ONE - qpow(base)).inv()
    rhs = q_exp_series(x, base, c, order) * q_exp_series(x, -base, -qpow(alpha * base) * c, order)
    extra = {"alpha": alpha}
    if order >= 1:
        extra["order1_is_x_ok"] = alpha != 1 or (lhs.coeff(1) == x and rhs.coeff(1) == x)
    return IdentityResult(f"heine[alpha={alpha}]", order, lhs.residual_counts(rhs), extra)


def heine2_check(order: int = 4, N: int = 2) -> IdentityResult:
    """Heine recast in U_q(sl_{N+1})^{(x)2}: the k_lambda^{-1} products against J_1."""
    alg = quantum_group("A", N)
    lam = alg.highest_root
    p = alg.pres
    e, ki = alg.e(lam), alg.k(lam, -1)
    one = p.one()
    T = TensorPoly.tensor
    one2 = T(one, one)
    conv = QConvention("onesided", 2)
    d = (qpow(2) - ONE).inv()
    coeffs = [one2]
    left = one
    for n in range(1, order + 1):
        left = left * (ki.scale(qpow(2 * (n - 1))) - one).scale(d)
        coeffs.append(T(left, e ** n).scale(q_factorial(n, conv).inv()))
    lhs = TSeries(coeffs, order, one2)
    c = (ONE - qpow(2)).inv()
    J1 = q_exp_series(T(one, e), 2, c, order) * q_exp_series(T(ki, e), -2, -c, order)
    return IdentityResult(f"heine2[A{N}]", order, lhs.residual_counts(J1), {"algebra": f"U_q(sl{N + 1})"})


def dilog_check(order: int = 6, base: int = 1) -> IdentityResult:
    """exp_Q(t x/(1-Q)) = exp(sum_n t^n x^n / (n (1 - Q^n))), Q = q^base."""
    _, x = _symbol()
    lhs = q_exp_series(x, base, (ONE - qpow(base)).inv(), order)
    logs = [QRatFunc(0)] + [(QRatFunc(n) * (ONE - qpow(base * n))).inv() for n in range(1, order + 1)]
    # L = sum_n t^(n-1) x^n/(n(1-Q^n)); exp_series supplies the remaining factor t
    L = TSeries([(x ** n).scale(logs[n]) for n in range(1, order + 1)], order, x.pres.one())
    rhs = exp_series(L, 1, order)
    extra = {"base": base}
    if order >= 2:
        c2 = QRatFunc(Fraction(1, 2)) * ((ONE - qpow(2 * base)).inv() + ((ONE - qpow(base)) ** 2).inv())
        extra["order2_split_ok"] = lhs.coeff(2) == (x ** 2).scale(c2)
    return IdentityResult(f"dilog[q^{base}]", order, lhs.residual_counts(rhs), extra)


@dataclass
class IdentitySuiteReport:
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {"suite": "identities", "pass": self.passed, "results": [r.to_json() for r in self.results]}


IDENTITY_NAMES = ("heine", "heine2", "dilog", "five_term")


def run_identity(name: str, order: int | None = None, zeta: QRatFunc | int = 1) -> list:
    """Results for one named identity at its default order (or ``order``)."""
    if name == "heine":
        return [heine_check(a, order or 6) for a in (0, 1, 2)]
    if name == "heine2":
        return [heine2_check(order or 4)]
    if name == "dilog":
        return [dilog_check(order or 6, b) for b in (1, 2)]
    if name == "five_term":
        return [five_term_check(order or 4, zeta), five_term_commuting(order or 4)]
    raise KeyError(f"unknown identity {name!r}; known: {', '.join(IDENTITY_NAMES)}")


def identity_suite(order: int | None = None) -> IdentitySuiteReport:
    """Heine (alpha = 0, 1, 2), heine2 in U_q(sl3), dilog and the five-term relation.

    Without ``order`` each identity runs at its own default (6, 4, 6, 4).
    """
    rep = IdentitySuiteReport()
    for name in IDENTITY_NAMES:
        o = None if order is None else (min(order, 4) if name in ("heine2", "five_term") else order)
        rep.results.extend(run_identity(name, o))
    return rep
