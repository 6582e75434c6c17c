"""Cremmer-Gervais type twists in U'_q(sl3) and the Jordanian basis change of e_{1+2} L1.

All constructions live in the U'_q(sl3) presentation, whose coproduct table
already carries the abelian factor; nothing of the form q^{h (x) h} is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..coeff import ONE, QConvention, QRatFunc, Scalar, as_scalar, q_factorial, qpow
from ..hopf import TensorPoly, TSeries, coproduct, exp_series, geometric_series, q_exp_series
from ..qgroups.classical import classical_sl3_weights
from ..qgroups.integral import NotRegular, integral_membership, specialize_element
from ..qgroups.uq import UqAlgebra, uq_prime_sl3
from .core import Twist, TwistedHopf, coboundary_twist, flip_series, tensor_series

@lru_cache(maxsize=None)
def _c() -> QRatFunc:
    """1/(1 - q^2)."""
    return (ONE - qpow(2)).inv()


class Sl3Data:
    """Frequently used elements of U'_q(sl3)."""

    def __init__(self, alg: UqAlgebra | None = None):
        A = alg or uq_prime_sl3()
        self.alg = A
        self.pres = A.pres
        self.hopf = A.hopf
        self.one = A.pres.one()
        self.e1, self.e2, self.f2 = A.e(1), A.e(2), A.f(2)
        self.e12 = A.e((1, 1))
        self.L1 = A.cartan((1, 0))
        self.L1sq = A.cartan((2, 0))
        self.K = A.cartan((2, -2))  # L1^2 L2^-2
        self.Kinv = A.cartan((-2, 2))
        self.E = self.e12 * self.L1  # e_{1+2} L1
        self.one2 = TensorPoly.tensor(self.one, self.one)

    def T(self, a, b) -> TensorPoly:
        return TensorPoly.tensor(a, b)


@lru_cache(maxsize=None)
def sl3() -> Sl3Data:
    return Sl3Data()


def _check_regular(F: Twist) -> list:
    """Indices of t-coefficients outside the regular form."""
    bad = []
    for n, c in enumerate(F.series.coeffs):
        if c is not None and not integral_membership(c).member:
            bad.append(n)
    return bad


def _qfact(n: int, base: int) -> QRatFunc:
    return q_factorial(n, QConvention("onesided", base))


def divided_product(x, n: int, shift: int, pres) -> "NCPoly":
    """prod_{j<n} (x q^{shift j} - 1)/(q^2 - 1)."""
    d = (qpow(2) - ONE).inv()
    out = pres.one()
    for j in range(n):
        out = out * (x.scale(qpow(shift * j)) - pres.one()).scale(d)
    return out


# ---------------------------------------------------------------------------
# Phi_CG and F_CG


def cg_hat_twist(c: Scalar = 1, order: int = 3) -> Twist:
    """exp_{q^-2}(zeta f2 (x) e1) with zeta = c t."""
    S = sl3()
    ser = q_exp_series(S.T(S.f2, S.e1), -2, c, order)
    return Twist(ser, S.hopf, "cg_hat", "exp_{q^-2}(zeta f2 x e1), zeta = c t")


def cg_V(order: int, zeta_coef: Scalar = 1, zeta_degree: int = 1, e_prefactor: Scalar | None = None) -> TSeries:
    """exp_{q^-2}(-zeta/(1-q^2) e1 L1^2 L2^-2) exp_{q^2}(t/(1-q^2) f2), zeta = c t^d."""
    S = sl3()
    pre = -as_scalar(zeta_coef) * _c() if e_prefactor is None else as_scalar(e_prefactor)
    a = q_exp_series(S.e1 * S.K, -2, pre, order, t_degree=zeta_degree)
    b = q_exp_series(S.f2, 2, _c(), order)
    return a * b


def cg_regular_twist(order: int = 3, zeta_coef: Scalar = 1, check: bool = True) -> Twist:
    """F_CG = (V (x) V) exp_{q^-2}(q^-2 zeta t/(1-q^2) f2 (x) e1) Delta(V^-1) with zeta = c t."""
    S = sl3()
    V = cg_V(order, zeta_coef)
    mid = q_exp_series(S.T(S.f2, S.e1), -2, qpow(-2) * as_scalar(zeta_coef) * _c(), order, t_degree=2)
    ser = tensor_series(V, V) * mid * coproduct(V.inv(), S.hopf)
    F = Twist(ser, S.hopf, "cg_regular", "(V x V) exp_{q^-2}(q^-2 zeta t/(1-q^2) f2 x e1) Delta(V^-1)")
    if check:
        bad = _check_regular(F)
        if bad:
            raise NotRegular(-1, f"t^{bad[0]} coefficient of F_CG")
    return F


def heine_closed_form(order: int, second, left_k: bool = False) -> TSeries:
    """1 + sum_n 1/(n)_{q^2}! (1 (x) prod_j (L1^-2 L2^2 q^{2j} - 1)/(q^2-1)) (t f2 (x) 1 + Y_n)^n.

    ``second`` is the t-series of the second summand without the K-factor
    placement: it is multiplied as  zeta(t) * K e1 (x) K  when ``left_k`` (the
    factor order taken literally) and as  zeta(t) * e1 K (x) K  otherwise.
    """
    S = sl3()
    e = (S.K * S.e1) if left_k else (S.e1 * S.K)
    arg = TSeries([None, S.T(S.f2, S.one)], order, S.one2) + second.map(lambda c: c) * TSeries([S.T(e, S.K)], order, S.one2)
    out = TSeries.one(S.one2, order)
    pw = TSeries.one(S.one2, order)
    for n in range(1, order + 1):
        pw = pw * arg
        pref = S.T(S.one, divided_product(S.Kinv, n, 2, S.pres))
        out = out + (TSeries([pref], order, S.one2) * pw).scale(_qfact(n, 2).inv())
    return out


def _zeta_series(coef: Scalar, degree: int, order: int) -> TSeries:
    S = sl3()
    cs = [None] * (order + 1)
    if degree <= order:
        cs[degree] = S.one2.scale(coef)
    return TSeries(cs, order, S.one2)


def cg_closed_form_check(order: int = 3, zeta_coef: Scalar = 1) -> dict:
    F = cg_regular_twist(order, zeta_coef, check=False)
    z = _zeta_series(zeta_coef, 1, order)
    out = {}
    for label, left in (("literal_K_e1", True), ("e1_K", False)):
        res = F.series.residual_counts(heine_closed_form(order, z, left))
        out[label] = {"residual_terms": res, "pass": not any(res)}
    return out


def cg_atoms_regular(nmax: int = 3) -> list:
    """Membership of (L1^-2 L2^2 q^{2(n-1)} - 1)/(q^2 - 1) for n = 1..nmax."""
    S = sl3()
    out = []
    for n in range(1, nmax + 1):
        x = (S.Kinv.scale(qpow(2 * (n - 1))) - S.one).scale((qpow(2) - ONE).inv())
        out.append(integral_membership(x).member)
    return out


# ---------------------------------------------------------------------------
# five-term relation on the F_CG instance


def _qbracket(a, b, c: Scalar = 1):
    """[a, b]_c = c ab - ba."""
    return (a * b).scale(c) - b * a


@dataclass
class IdentityResult:
    name: str
    t_order: int
    residual_terms: list
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.residual_terms) and all(v for k, v in self.extra.items() if k.endswith("_ok"))

    def to_json(self) -> dict:
        return {
            "identity": self.name,
            "t_order": self.t_order,
            "residual_terms": list(self.residual_terms),
            "pass": self.passed,
            "details": self.extra,
        }


def five_term_check(order: int = 4, zeta_coef: Scalar = 1) -> IdentityResult:
    """exp_{q^-2}(u) exp_{q^-2}(v) = exp_{q^-2}(v) exp_{q^-2}([u,v]) exp_{q^-2}(u).

    u = -t/(1-q^2) f2 (x) L1^-2 L2^2 and v = -zeta/(1-q^2) 1 (x) e1 L1^2 L2^-2;
    with e_{q^2}(x) := exp_{q^-2}(x/(1-q^2)) this is the five-term relation in its literal form.
    The t-dependence is kept outside u and v (both are linear in t).
    """
    S = sl3()
    c = _c()
    u = S.T(S.f2, S.Kinv).scale(-c)
    v = S.T(S.one, S.e1 * S.K).scale(-as_scalar(zeta_coef) * c)
    uv = u * v - v * u  # carries t^2
    hyp1 = _qbracket(u, uv, qpow(2))
    hyp2 = _qbracket(v, uv, qpow(-2))
    lhs = q_exp_series(u, -2, 1, order) * q_exp_series(v, -2, 1, order)
    rhs = q_exp_series(v, -2, 1, order) * q_exp_series(uv, -2, 1, order, t_degree=2) * q_exp_series(u, -2, 1, order)
    literal_mid = S.T(S.f2, S.e1).scale(qpow(-2) * as_scalar(zeta_coef) * c)
    return IdentityResult(
        "five_term",
        order,
        lhs.residual_counts(rhs),
        {
            "hypothesis_u_ok": not hyp1,
            "hypothesis_v_ok": not hyp2,
            "middle_matches_literal_ok": uv == literal_mid,
            "convention": "[a,b]_c = c*a*b - b*a; [u,v] = uv - vu; e_{q^2}(x) = exp_{q^-2}(x/(1-q^2))",
        },
    )


def five_term_commuting(order: int = 4) -> IdentityResult:
    """Commuting u, v: the middle factor is 1."""
    S = sl3()
    u = S.T(S.e1, S.one)
    v = S.T(S.one, S.f2)
    mid = u * v - v * u
    lhs = q_exp_series(u, -2, 1, order) * q_exp_series(v, -2, 1, order)
    rhs = q_exp_series(v, -2, 1, order) * q_exp_series(u, -2, 1, order)
    return IdentityResult("five_term_commuting", order, lhs.residual_counts(rhs), {"middle_is_zero_ok": not mid})


# ---------------------------------------------------------------------------
# the Jordanian twist of e_{1+2} L1


def jordanian_l1_W(order: int) -> TSeries:
    """W = exp_{q^-2}(-t/(1-q^2) e_{1+2} L1)."""
    S = sl3()
    return q_exp_series(S.E, -2, -_c(), order)


def jordanian_l1_twist(order: int = 3) -> Twist:
    S = sl3()
    return coboundary_twist(jordanian_l1_W(order), S.hopf, "jordanian_l1", "(W x W) Delta(W^-1), W = exp_{q^-2}(-t/(1-q^2) e_{1+2} L1)")


def geometric_E(order: int) -> TSeries:
    """1/(1 - t e_{1+2} L1)."""
    return geometric_series(sl3().E, 1, order)


def conjugate(W: TSeries, g) -> TSeries:
    Wi = W.inv()
    return W * g * Wi


def conjugation_forms(order: int = 3) -> dict:
    """W g W^{-1} for g in {L1^2 L2^-2, e1, f2} against their closed forms."""
    S = sl3()
    W = jordanian_l1_W(order)
    G = geometric_E(order)
    k_ser = TSeries.constant(S.K, order)
    want_e1 = TSeries.constant(S.e1, order) * G
    want_f2 = TSeries.constant(S.f2, order) - (TSeries([None, S.K * S.e1], order, S.one) * G).scale(qpow(-1) * _c())
    out = {}
    for name, g, want in (("K", S.K, k_ser), ("e1", S.e1, want_e1), ("f2", S.f2, want_f2)):
        res = conjugate(W, g).residual_counts(want)
        out[name] = {"residual_terms": res, "pass": not any(res)}
    return out


def e12l1_coproduct_check() -> dict:
    """Delta(e_{1+2} L1) = e_{1+2}L1 (x) L1^2 + 1 (x) e_{1+2}L1 + (1-q^2) e1 L1^2 L2^-2 (x) e2 L1."""
    S = sl3()
    got = coproduct(S.E, S.hopf)
    want = S.T(S.E, S.L1sq) + S.T(S.one, S.E) + S.T(S.e1 * S.K, S.e2 * S.L1).scale(ONE - qpow(2))
    d = got - want
    return {"residual": len(d), "pass": not d}


def q_commutation_forms() -> dict:
    S = sl3()
    A = S.T(S.one, S.E)
    B = S.T(S.E, S.L1sq) + S.T(S.e1 * S.K, S.e2 * S.L1).scale(ONE - qpow(2))
    first = A * B - (B * A).scale(qpow(-2))
    C = S.T(S.e1 * S.K, S.e2 * S.L1)
    D = S.T(S.E, S.L1sq)
    second = C * D - (D * C).scale(qpow(-2))
    return {"first": {"residual": len(first), "pass": not first}, "second": {"residual": len(second), "pass": not second}}


def jordanian_l1_factors(order: int = 3) -> dict:
    """J = J1 J2 with the explicit closed forms of J1 and J2."""
    S = sl3()
    J = jordanian_l1_twist(order)
    G = geometric_E(order)
    arg = tensor_series(TSeries.constant(S.e1 * S.K, order) * G, TSeries.constant(S.e2 * S.L1, order))
    J1 = q_exp_series(arg, 2, 1, order)
    cs = [S.one2]
    for n in range(1, order + 1):
        c = _qfact(n, -2).inv() * (-1) ** n
        cs.append(S.T(S.E ** n, divided_product(S.L1sq, n, -2, S.pres)).scale(c))
    J2 = TSeries(cs, order, S.one2)
    res = J.series.residual_counts(J1 * J2)
    return {"residual_terms": res, "pass": not any(res)}


def specialize_sl3(x, method: str = "laurent"):
    return specialize_element(x, classical_sl3_weights(), method)


def jordanian_l1_classical(order: int = 3) -> dict:
    """Regularity of J, J-bar against its closed form, and J-bar_21 != J-bar."""
    S = sl3()
    J = jordanian_l1_twist(order)
    bad = _check_regular(J)
    U = classical_sl3_weights()
    Jb = specialize_sl3(J.series)
    E12, E23, E13 = U.e(1), U.e(2), U.e((1, 1))
    hw1 = U.h("hw1")
    p = U.pres
    one2 = TensorPoly.tensor(p.one(), p.one())
    G = geometric_series(E13, 1, order)
    arg = tensor_series(TSeries.constant(E12, order) * G, TSeries.constant(E23, order))
    cs = [one2]
    poly = p.one()
    fact = 1
    for n in range(1, order + 1):
        poly = poly * (hw1 - p.one().scale(n - 1))
        fact *= n
        cs.append(TensorPoly.tensor(E13 ** n, poly).scale(QRatFunc((-1) ** n) * QRatFunc(fact).inv()))
    closed = exp_series(arg, 1, order) * TSeries(cs, order, one2)
    res = Jb.residual_counts(closed)
    first = TensorPoly.tensor(E12, E23) - TensorPoly.tensor(E13, hw1)
    flipped = flip_series(Jb)
    return {
        "regular": not bad,
        "closed_form": {"residual_terms": res, "pass": not any(res)},
        "order1_matches": Jb.coeff(1) == first,
        "J21_differs_at_order1": Jb.coeff(1) != flipped.coeff(1),
        "Jbar": Jb,
    }


# ---------------------------------------------------------------------------
# F_q in the J-twisted algebra


def fq_twist(order: int = 3, v_t_power: int = 2) -> Twist:
    """F_q = (WV (x) WV) exp_{q^-2}(q^-3 t^3/(1-q^2)^2 f2 (x) e1) Delta(V^-1) (W^-1 (x) W^-1).

    V = exp_{q^-2}(-q^-1 t^p/(1-q^2)^2 e1 L1^2 L2^-2) exp_{q^2}(t/(1-q^2) f2); the
    literal V has p = 1, the closed form (and regularity) need p = 2.
    """
    S = sl3()
    W = jordanian_l1_W(order)
    J = coboundary_twist(W, S.hopf, "jordanian_l1")
    V = q_exp_series(S.e1 * S.K, -2, -qpow(-1) * _c() * _c(), order, t_degree=v_t_power) * q_exp_series(S.f2, 2, _c(), order)
    mid = q_exp_series(S.T(S.f2, S.e1), -2, qpow(-3) * _c() * _c(), order, t_degree=3)
    Ft = tensor_series(V, V) * mid * coproduct(V.inv(), S.hopf)
    Wi = W.inv()
    ser = tensor_series(W, W) * Ft * tensor_series(Wi, Wi)
    h = TwistedHopf(S.hopf, J)
    F = Twist(ser, h, f"F_q[p={v_t_power}]", "(W x W) F~_CG (W^-1 x W^-1)")
    F.tilde = Ft
    return F


def fq_closed_form(order: int) -> TSeries:
    """Literal closed-form expansion of F_q in terms of e1/(1 - t e_{1+2}L1) and (K - 1)/(q^2 - 1)."""
    S = sl3()
    G = geometric_E(order)
    d = (qpow(2) - ONE).inv()
    y = (S.K - S.one).scale(d)
    second = tensor_series(TSeries.constant(S.e1, order) * G, TSeries.constant(y, order))
    second = second * TSeries([None, None, S.one2.scale(-qpow(-1))], order, S.one2)
    arg = TSeries([None, S.T(S.f2, S.one)], order, S.one2) + second
    out = TSeries.one(S.one2, order)
    pw = TSeries.one(S.one2, order)
    for n in range(1, order + 1):
        pw = pw * arg
        pref = S.T(S.one, divided_product(S.Kinv, n, 2, S.pres))
        out = out + (TSeries([pref], order, S.one2) * pw).scale(_qfact(n, 2).inv())
    return out


def fq_tilde_closed_form(order: int, left_k: bool = False) -> TSeries:
    """F~_CG in closed form: zeta = q^-1 t^2/(1-q^2) in the Heine form."""
    return heine_closed_form(order, _zeta_series(qpow(-1) * _c(), 2, order), left_k)
