"""Quantum Jordanian twists J(e_lambda) = (W (x) W) Delta(W^{-1}) and their classical limits."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..coeff import ONE, QRatFunc, format_fraction, qpow
from ..hopf import TensorPoly, TSeries, coproduct, exp_series, q_exp_series, series_from_terms
from ..qgroups.classical import ClassicalAlgebra, classical_algebra
from ..qgroups.integral import NotRegular, integral_membership, specialize_element
from ..qgroups.uq import UqAlgebra, quantum_group
from .core import Twist, coboundary_twist, flip_series, specialize_twist, tensor_series


def highest_root_data(alg: UqAlgebra):
    """(lambda, (lambda, lambda), e_lambda)."""
    lam = alg.highest_root
    return lam, alg.rs.form(lam, lam), alg.e(lam)


def jordanian_W(alg: UqAlgebra, order: int) -> TSeries:
    """W = exp_{q_lambda}(t e_lambda / (1 - q_lambda))."""
    _, ql, e = highest_root_data(alg)
    return q_exp_series(e, ql, (ONE - qpow(ql)).inv(), order)


def jordanian_twist(typ: str, rank: int, order: int = 4, check: bool = True, ordering="standard") -> Twist:
    """J(e_lambda) for the highest root; with ``check`` every coefficient is tested for regularity
    and the whole series is specialized (NotRegular propagates)."""
    alg = quantum_group(typ, rank, ordering)
    J = coboundary_twist(jordanian_W(alg, order), alg.hopf, f"jordanian[{alg.rs.label}]", "(W x W) Delta(W^-1), W = exp_{q_lambda}(t e_lambda/(1-q_lambda))")
    if check:
        for n, c in enumerate(J.series.coeffs):
            if c is None:
                continue
            wit = integral_membership(c)
            if not wit.member:
                raise NotRegular(-1, f"t^{n} coefficient of {J.name}")
        specialize_element(J.series, classical_algebra(typ, rank, ordering))
    return J


def two_factor_form(alg: UqAlgebra, order: int) -> TSeries:
    """exp_{q_l}(t/(1-q_l) 1 (x) e_l) exp_{q_l^{-1}}(-t/(1-q_l) (Delta(e_l) - e_l (x) 1))."""
    _, ql, e = highest_root_data(alg)
    p = alg.pres
    c = (ONE - qpow(ql)).inv()
    a = TensorPoly.tensor(p.one(), e)
    b = coproduct(e, alg.hopf) - TensorPoly.tensor(e, p.one())
    return q_exp_series(a, ql, c, order) * q_exp_series(b, -ql, -c, order)


def w_singularity(alg: UqAlgebra, order: int = 2) -> dict:
    """W alone is not regular: specialization must raise NotRegular."""
    W = jordanian_W(alg, order)
    target = classical_algebra(alg.rs.type, alg.rs.rank)
    try:
        specialize_element(W, target)
    except NotRegular as exc:
        return {"not_regular": True, "message": str(exc)}
    return {"not_regular": False, "message": "W specialized without error"}


# ---------------------------------------------------------------------------
# classical closed forms


def _H_lambda(U: ClassicalAlgebra) -> "NCPoly":
    lam = U.rs.highest_root
    out = U.pres.zero()
    for i, c in enumerate(lam):
        if c:
            out = out + U.h(i + 1).scale(c)
    return out


def heine_part(U: ClassicalAlgebra, order: int, step: int = 1) -> TSeries:
    """1 (x) 1 + sum_n (-1)^n t^n H(H-s)...(H-(n-1)s) / (2^n n!) (x) E^n, s = ``step``.

    step=1 is the literal H(H-1)...(H-n+1) product; step=2 is binom(H/2, n) (x) (-tE)^n, which is
    what [H, E] = 2E forces.
    """
    H = _H_lambda(U)
    E = U.e(U.rs.highest_root)
    p = U.pres
    one2 = TensorPoly.tensor(p.one(), p.one())
    coeffs = [one2]
    poly = p.one()
    fact = 1
    for n in range(1, order + 1):
        poly = poly * (H - p.one().scale(step * (n - 1)))
        fact *= n
        c = QRatFunc(Fraction((-1) ** n, 2 ** n * fact))
        coeffs.append(TensorPoly.tensor(poly, E ** n).scale(c))
    return TSeries(coeffs, order, one2)


def closed_formula(N: int, order: int, step: int = 1) -> TSeries:
    """exp(-t sum_i E_{1,i+1} (x) E_{i+1,N+1} e^{-sigma/2}) * heine_part, in U(sl_{N+1})^{(x)2}.

    sigma = ln(1 - t E_{1,N+1}), so e^{-sigma/2} = (1 - t E_{1,N+1})^{-1/2}.
    """
    U = classical_algebra("A", N)
    p = U.pres
    lam = U.rs.highest_root
    E = U.e(lam)
    # (1 - tE)^{-1/2} = sum binom(-1/2, n) (-t E)^n
    w = [Fraction(1)]
    for n in range(1, order + 1):
        w.append(w[-1] * (Fraction(-1, 2) - (n - 1)) / n * -1)
    g = series_from_terms(E, [QRatFunc(x) for x in w], order)
    X = None
    for i in range(1, N):
        a = tuple(1 if j < i else 0 for j in range(N))
        b = tuple(0 if j < i else 1 for j in range(N))
        term = TensorPoly.tensor(U.e(a), U.e(b))
        X = term if X is None else X + term
    if X is None:
        ext = TSeries.one(TensorPoly.tensor(p.one(), p.one()), order)
    else:
        arg = tensor_series(TSeries.one(p.one(), order), g)
        arg = TSeries([X], order, X.one_like()) * arg
        ext = exp_series(arg, -1, order)
    return ext * heine_part(U, order, step)


def a1_literal(order: int = 2) -> TSeries:
    """1 (x) 1 - (t/2) H (x) E + t^2 H(H-1)/8 (x) E^2, the literal N = 1 formula."""
    return heine_part(classical_algebra("A", 1), order, step=1)


def compare_series(a: TSeries, b: TSeries, order: int) -> list:
    return a.truncate(order).residual_counts(b.truncate(order))


def closed_formula_check(N: int, order: int = 3) -> dict:
    """Specialized J(e_lambda) in sl_{N+1} against the closed formula, both readings of the Heine sum."""
    J = jordanian_twist("A", N, order)
    Jbar = specialize_twist(J, classical_algebra("A", N)).series
    out = {"N": N, "t_order": order}
    for label, step in (("literal", 1), ("step_2", 2)):
        res = compare_series(Jbar, closed_formula(N, order, step), order)
        out[label] = {"residual_terms": res, "pass": not any(res)}
    return out


# ---------------------------------------------------------------------------
# semiclassical r-matrix


def r_lambda_pattern(U: ClassicalAlgebra) -> TensorPoly:
    """H_lambda ^ E_lambda + 2 sum_{g1 < g2, g1 + g2 = lambda} E_g1 ^ E_g2 (a ^ b = a(x)b - b(x)a)."""
    lam = U.rs.highest_root
    H = _H_lambda(U)
    E = U.e(lam)

    def wedge(a, b):
        return TensorPoly.tensor(a, b) - TensorPoly.tensor(b, a)

    out = wedge(H, E)
    roots = U.ordering.roots
    for i, g1 in enumerate(roots):
        for g2 in roots[i + 1:]:
            if tuple(a + b for a, b in zip(g1, g2)) == tuple(lam):
                out = out + wedge(U.e(g1), U.e(g2)).scale(2)
    return out


@dataclass
class RMatrixReport:
    algebra: str
    r_terms: int
    skew: bool
    constant: str | None
    proportional: bool
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.skew and self.proportional

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "r_terms": self.r_terms,
            "skew": self.skew,
            "constant": self.constant,
            "proportional": self.proportional,
            "pass": self.passed,
            "notes": self.notes,
        }


def _ratio(a: TensorPoly, b: TensorPoly):
    if not b:
        return None
    key = min(b.terms, key=repr)
    c = a.terms.get(key)
    if c is None:
        return None
    return c / b.terms[key]


def semiclassical_r_check(Fbar: Twist, U: ClassicalAlgebra | None = None) -> RMatrixReport:
    """t^1 coefficient of F21 F^{-1}: skew-symmetry and proportionality to r_lambda."""
    R = flip_series(Fbar.series) * Fbar.series.inv()
    r = R.coeff(1)
    skew = not (r + r.flip())
    name = Fbar.hopf.name
    if U is None:
        if not r:
            return RMatrixReport(name, 0, skew, "0", True, {"pattern": "r = 0"})
        raise ValueError("a classical algebra is needed to build r_lambda")
    pat = r_lambda_pattern(U)
    c = _ratio(r, pat) if r else QRatFunc(0)
    prop = c is not None and not (r - pat.scale(c))
    const = None if c is None else format_fraction(c.value_at_one())
    return RMatrixReport(name, len(r), skew, const, prop, {"pattern": "H_l^E_l + 2 sum E_g1^E_g2"})
