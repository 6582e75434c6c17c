"""Twists as truncated t-series and the verification of the twist equations.

A twist F in H (x) H[[t]] must satisfy

    F12 (Delta (x) id)(F) = F23 (id (x) Delta)(F),
    (eps (x) id)(F) = (id (x) eps)(F) = 1,

which is checked order by order in t after reducing every coefficient to
normal form.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..coeff import ONE
from ..hopf import HopfPresentation, TensorPoly, TSeries, counit_slot, delta_slot


class TwistedHopf:
    """H with the coproduct Delta^J(x) = J Delta(x) J^{-1}; counit and algebra unchanged."""

    def __init__(self, base: HopfPresentation, J: "Twist | TSeries"):
        self.base = base
        self.J = J.series if isinstance(J, Twist) else J
        self.Jinv = self.J.inv()
        self.pres = base.pres
        self.pres2 = base.pres2
        self.pres3 = base.pres3
        self._emb: dict = {}

    @property
    def name(self) -> str:
        return f"{self.base.name}^J"

    def _embedded(self, i: int):
        if i not in self._emb:
            pos = (i, i + 1)
            self._emb[i] = (embed_series(self.J, pos, self.pres3), embed_series(self.Jinv, pos, self.pres3))
        return self._emb[i]

    def delta_slot(self, T: TSeries, i: int) -> TSeries:
        """Delta^J on slot i of a rank-2 series (result has rank 3)."""
        if T.unit.rank != 2:
            raise ValueError("twisted slot coproduct is implemented for rank-2 series")
        J, Ji = self._embedded(i)
        return J * _series(delta_slot(T, i, self.base), J) * Ji

    def coproduct(self, x: TSeries) -> TSeries:
        from ..hopf import coproduct

        return self.J * _series(coproduct(x, self.base), self.J) * self.Jinv


def _series(x, like: TSeries) -> TSeries:
    if isinstance(x, TSeries):
        return x
    return TSeries([x], like.order, like.unit)


def embed_series(S: TSeries, positions, pres) -> TSeries:
    return S.map(lambda c: c.embed(positions, pres))


def tensor_series(*factors) -> TSeries:
    """Tensor product of t-series (or plain elements) with the t-degrees added."""
    order = min(f.order for f in factors if isinstance(f, TSeries))
    sers = []
    for f in factors:
        if isinstance(f, TSeries):
            sers.append(f)
        else:
            sers.append(TSeries([f], order, f.pres.one() if hasattr(f.pres, "one") else f.one_like()))
    out = None
    for s in sers:
        s = s.map(lambda c: c if isinstance(c, TensorPoly) else TensorPoly.tensor(c))
        if out is None:
            out = s
            continue
        coeffs = [None] * (order + 1)
        for i, a in enumerate(out.coeffs[: order + 1]):
            if a is None:
                continue
            for j in range(order + 1 - i):
                b = s.coeffs[j]
                if b is None:
                    continue
                p = _tensor2(a, b)
                coeffs[i + j] = p if coeffs[i + j] is None else coeffs[i + j] + p
        out = TSeries(coeffs, order, _tensor2(out.unit, s.unit))
    return out


def _tensor2(a: TensorPoly, b: TensorPoly) -> TensorPoly:
    terms = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            terms[wa + wb] = ca * cb
    return TensorPoly(tuple(a.pres) + tuple(b.pres), terms)


def flip_series(F: TSeries) -> TSeries:
    return F.map(lambda c: c.flip())


@dataclass
class Twist:
    series: TSeries
    hopf: object  # HopfPresentation or TwistedHopf
    name: str = "twist"
    provenance: str = ""

    @property
    def order(self) -> int:
        return self.series.order

    def coeff(self, n: int) -> TensorPoly:
        return self.series.coeff(n)

    def flip(self) -> "Twist":
        return Twist(flip_series(self.series), self.hopf, self.name + "_21", self.provenance)

    def truncate(self, order: int) -> "Twist":
        return Twist(self.series.truncate(order), self.hopf, self.name, self.provenance)


@dataclass
class TwistReport:
    twist: str
    algebra: str
    t_order: int
    residual_terms: list
    counit_ok: bool
    elapsed_ms: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counit_ok and not any(self.residual_terms)

    def to_json(self, timing: bool = False) -> dict:
        return {
            "twist": self.twist,
            "algebra": self.algebra,
            "t_order": self.t_order,
            "residual_terms": list(self.residual_terms),
            "counit_ok": self.counit_ok,
            "pass": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 1) if timing else 0,
            "notes": self.notes,
        }


def _delta_slot(ctx, T: TSeries, i: int) -> TSeries:
    if isinstance(ctx, TwistedHopf):
        return ctx.delta_slot(T, i)
    return delta_slot(T, i, ctx)


def _base_hopf(ctx) -> HopfPresentation:
    return ctx.base if isinstance(ctx, TwistedHopf) else ctx


def counit_check(F: Twist, order: int | None = None) -> bool:
    order = F.order if order is None else order
    S = F.series.truncate(order)
    h = _base_hopf(F.hopf)
    for slot in (0, 1):
        red = counit_slot(S, slot, h)
        for n, c in enumerate(red.coeffs):
            want = red.unit if n == 0 else None
            if n == 0 and (c is None or c != want):
                return False
            if n > 0 and c is not None and c:
                return False
    return True


def cocycle_sides(F: Twist, order: int | None = None):
    """(F12 (Delta x id) F, F23 (id x Delta) F) as rank-3 series."""
    order = F.order if order is None else order
    S = F.series.truncate(order)
    p3 = F.hopf.pres3
    F12 = embed_series(S, (0, 1), p3)
    F23 = embed_series(S, (1, 2), p3)
    lhs = F12 * _delta_slot(F.hopf, S, 0)
    rhs = F23 * _delta_slot(F.hopf, S, 1)
    return lhs, rhs


def cocycle_check(F: Twist, order: int | None = None) -> TwistReport:
    order = F.order if order is None else order
    t0 = time.perf_counter()
    lhs, rhs = cocycle_sides(F, order)
    res = lhs.residual_counts(rhs)
    ok = counit_check(F, order)
    return TwistReport(F.name, F.hopf.name, order, res, ok, (time.perf_counter() - t0) * 1000)


def coboundary_twist(W: TSeries, h, name: str = "coboundary", provenance: str = "(W x W) Delta(W^-1)") -> Twist:
    """(W (x) W) Delta(W^{-1}); W must start with 1."""
    Winv = W.inv()
    base = _base_hopf(h)
    from ..hopf import coproduct

    if isinstance(h, TwistedHopf):
        dW = h.coproduct(Winv)
    else:
        dW = coproduct(Winv, base)
    return Twist(tensor_series(W, W) * dW, h, name, provenance)


def identity_twist(h, order: int = 4) -> Twist:
    one = TensorPoly.one(_base_hopf(h).pres2)
    return Twist(TSeries.one(one, order), h, "identity", "1 (x) 1")


def classical_recheck(Fbar: Twist, order: int | None = None) -> TwistReport:
    """The twist equations for a specialized twist, inside the classical presentation."""
    rep = cocycle_check(Fbar, order)
    rep.notes["context"] = "classical"
    return rep


def specialize_twist(F: Twist, target, name: str | None = None) -> Twist:
    """Image of a regular twist at q = 1 (``target``: classical algebra or SpecializationMap)."""
    from ..qgroups.integral import specialize_element

    S = specialize_element(F.series, target)
    h = getattr(target, "hopf", None)
    if h is None:
        raise ValueError("target must carry a classical Hopf structure")
    return Twist(S, h, name or F.name + "_bar", "specialization of " + F.name)


def semiclassical_r(Fbar: Twist) -> TensorPoly:
    """t^1 coefficient of F21 F^{-1}."""
    R = flip_series(Fbar.series) * Fbar.series.inv()
    return R.coeff(1)
