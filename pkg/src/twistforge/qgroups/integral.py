"""The regular form and the specialization q -> 1.

Every invertible Cartan symbol k comes with the divided atom D = (k - 1)/(q - 1),
so k = 1 + u D with u = q - 1.  Two independent routes are provided:

* ``laurent``: expand k^m = prod (1 + u D)^m as a power series in u, multiply by
  the Laurent expansion of the scalar and require every negative power of u
  to cancel; the u^0 part is the classical element.
* ``witness``: rewrite exactly, k^m = k^{-N} (1 + u D)^{m + N} with m + N >= 0,
  which gives the unique expansion sum a_J(q) k^{-N} D^J per word; the
  element is regular iff every a_J is regular at q = 1.

Both work jointly over all tensor slots, which matters for twists whose
factors are singular on their own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from ..coeff import ONE, ZERO, QRatFunc, Q, format_qratfunc, laurent_expand, pole_order_at_one, specialize_scalar
from ..hopf import TensorPoly, TSeries
from ..ncalg import NCPoly, Presentation


class NotRegular(ArithmeticError):
    """The element is not in the regular form: a negative power of q - 1 survives."""

    def __init__(self, degree: int, term: str):
        super().__init__(f"not regular at q = 1: u^{degree} survives in {term}")
        self.degree = degree
        self.term = term


def _gbinom(m: int, n: int) -> Fraction:
    """Generalized binomial coefficient m choose n for any integer m."""
    out = Fraction(1)
    for i in range(n):
        out = out * (m - i) / (i + 1)
    return out


@dataclass
class SpecializationMap:
    """Images of letters and Cartan atoms in a classical presentation.

    ``letters`` maps a source letter name to a target NCPoly; ``cartan`` maps
    a source Cartan symbol name to the image of its divided atom
    (k - 1)/(q - 1) when the symbol is invertible, or of the symbol itself
    when it is primitive.
    """

    source: Presentation
    target: Presentation
    letters: dict
    cartan: dict
    _letter_img: list = field(default_factory=list, init=False, repr=False)
    _cart_img: list = field(default_factory=list, init=False, repr=False)

    def __post_init__(self):
        self._letter_img = [self.letters[x.name] for x in self.source.letters]
        self._cart_img = [self.cartan[c.name] for c in self.source.cartan]
        self._cache: dict = {}

    def image(self, key) -> NCPoly:
        """Classical image of (low, D-exponents, high)."""
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        low, dexp, high = key
        out = self.target.one()
        for i in low:
            out = out * self._letter_img[i]
        for s, e in enumerate(dexp):
            for _ in range(e):
                out = out * self._cart_img[s]
        for i in high:
            out = out * self._letter_img[i]
        self._cache[key] = out
        return out


def default_map(source: Presentation, target) -> SpecializationMap:
    """Position-by-position map onto a ClassicalAlgebra built for the same root data."""
    tp = target.pres if hasattr(target, "pres") else target
    if len(tp.letters) != len(source.letters) or tp.ncart != source.ncart:
        raise ValueError(f"{source.name} and {tp.name} do not match letter by letter")
    letters, cartan = {}, {}
    for x, y in zip(source.letters, tp.letters):
        if x.grading != y.grading:
            raise ValueError(f"letter {x.name} and {y.name} have different gradings")
        letters[x.name] = tp.gen(y.name)
    for c, d in zip(source.cartan, tp.cartan):
        if tuple(Fraction(v) for v in c.coweight) != tuple(Fraction(v) for v in d.coweight):
            raise ValueError(f"{c.name} and {d.name} act with different weights")
        cartan[c.name] = tp.gen(d.name)
    return SpecializationMap(source, tp, letters, cartan)


def _as_map(x_pres: Presentation, target) -> SpecializationMap:
    if isinstance(target, SpecializationMap):
        if target.source is not x_pres:
            raise ValueError("specialization map belongs to another presentation")
        return target
    return default_map(x_pres, target)


def _slots(x):
    """(presentations, {words tuple: coeff}) for an NCPoly or TensorPoly."""
    if isinstance(x, NCPoly):
        return (x.pres,), {(w,): c for w, c in x.terms.items()}
    if isinstance(x, TensorPoly):
        return tuple(x.pres), dict(x.terms)
    raise TypeError(f"cannot specialize {type(x).__name__}")


def _split_cartan(pres: Presentation, cart: tuple):
    """Separate grouplike exponents (expanded) from primitive ones (kept)."""
    group = tuple(e if c.invertible else 0 for c, e in zip(pres.cartan, cart))
    prim = tuple(0 if c.invertible else e for c, e in zip(pres.cartan, cart))
    return group, prim


def _cartan_series(group: tuple, order: int) -> dict:
    """prod_s (1 + u D_s)^{m_s} through u^order as {D-exponents: [coeff of u^0..u^order]}."""
    out = {tuple(0 for _ in group): [Fraction(1)] + [Fraction(0)] * order}
    for s, m in enumerate(group):
        if m == 0:
            continue
        new: dict = {}
        for dexp, poly in out.items():
            for n in range(order + 1):
                b = _gbinom(m, n)
                if not b:
                    continue
                d = list(dexp)
                d[s] += n
                key = tuple(d)
                acc = new.setdefault(key, [Fraction(0)] * (order + 1))
                for k, v in enumerate(poly):
                    if v and k + n <= order:
                        acc[k + n] += b * v
        out = {k: v for k, v in new.items() if any(v)}
    return out


def _describe(press, key) -> str:
    parts = []
    for p, (low, dexp, high) in zip(press, key):
        names = [p.letters[i].name for i in low]
        names += [f"D({p.cartan[s].name})^{e}" for s, e in enumerate(dexp) if e]
        names += [p.letters[i].name for i in high]
        parts.append("*".join(names) or "1")
    return " ox ".join(parts)


def _laurent_route(press, terms) -> dict:
    acc: dict = {}  # key tuple -> {u-degree: Fraction}
    for words, c in terms.items():
        P = pole_order_at_one(c)
        cs = laurent_expand(c, 0)
        slot_series = []
        for p, (low, cart, high) in zip(press, words):
            group, prim = _split_cartan(p, cart)
            ser = _cartan_series(group, P)
            slot_series.append([((low, tuple(a + b for a, b in zip(d, prim)), high), poly) for d, poly in ser.items()])
        combos = [((), [Fraction(1)] + [Fraction(0)] * P)]
        for items in slot_series:
            new = []
            for key, poly in combos:
                for k2, p2 in items:
                    prod = [Fraction(0)] * (P + 1)
                    for i, a in enumerate(poly):
                        if a:
                            for j, b in enumerate(p2):
                                if b and i + j <= P:
                                    prod[i + j] += a * b
                    if any(prod):
                        new.append((key + (k2,), prod))
            combos = new
        for key, poly in combos:
            slot = acc.setdefault(key, {})
            for deg in range(cs.min_degree, 1):
                a = cs.coeff(deg)
                if not a:
                    continue
                for j, b in enumerate(poly):
                    if b and deg + j <= 0:
                        slot[deg + j] = slot.get(deg + j, Fraction(0)) + a * b
    out = {}
    for key, series in acc.items():
        for deg in sorted(series):
            if deg < 0 and series[deg]:
                raise NotRegular(deg, _describe(press, key))
        v = series.get(0, Fraction(0))
        if v:
            out[key] = v
    return out


@dataclass
class IntegralWitness:
    """Exact expansion sum a_J(q) k^{-N} D^J per tensor slot."""

    member: bool
    shifts: tuple  # per slot, the exponent vector N
    terms: dict  # key tuple -> QRatFunc
    offending: list
    presentations: tuple = ()

    def to_json(self) -> dict:
        rows = []
        for key, c in sorted(self.terms.items(), key=lambda kc: repr(kc[0])):
            rows.append(f"({format_qratfunc(c)}) * {_describe(self.presentations, key)}")
        return {
            "member": self.member,
            "shifts": [list(s) for s in self.shifts],
            "terms": rows,
            "offending": [_describe(self.presentations, k) for k in self.offending],
        }


def _witness_route(press, terms) -> IntegralWitness:
    u = Q - ONE
    nslot = len(press)
    shifts = []
    for s in range(nslot):
        p = press[s]
        N = [0] * p.ncart
        for words in terms:
            group, _ = _split_cartan(p, words[s][1])
            for i, m in enumerate(group):
                N[i] = max(N[i], -m)
        shifts.append(tuple(N))
    acc: dict = {}
    upow = [ONE]
    for words, c in terms.items():
        combos = [((), c)]
        for s, (p, (low, cart, high)) in enumerate(zip(press, words)):
            group, prim = _split_cartan(p, cart)
            expansion = {tuple(0 for _ in group): 1}
            for i, m in enumerate(group):
                n = m + shifts[s][i]
                if n == 0:
                    continue
                new = {}
                for d, v in expansion.items():
                    for j in range(n + 1):
                        dd = list(d)
                        dd[i] += j
                        new[tuple(dd)] = new.get(tuple(dd), 0) + v * comb(n, j)
                expansion = new
            new_combos = []
            for key, coef in combos:
                for d, v in expansion.items():
                    j = sum(d)
                    while len(upow) <= j:
                        upow.append(upow[-1] * u)
                    k2 = (low, tuple(a + b for a, b in zip(d, prim)), high)
                    new_combos.append((key + (k2,), coef * upow[j] * v))
            combos = new_combos
        for key, coef in combos:
            v = acc.get(key, ZERO) + coef
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    offending = [k for k, v in acc.items() if pole_order_at_one(v) > 0]
    return IntegralWitness(not offending, tuple(shifts), acc, offending, tuple(press))


def integral_membership(x, form: str = "full") -> IntegralWitness:
    """Decide membership in the regular form; ``form="plus"`` also forbids lowering letters."""
    if form == "plus-subalgebra":
        form = "plus"
    if form not in ("full", "plus"):
        raise ValueError("form must be 'full', 'plus' or 'plus-subalgebra'")
    if isinstance(x, TSeries):
        raise TypeError("apply integral_membership to each t-coefficient")
    press, terms = _slots(x)
    wit = _witness_route(press, terms)
    if form == "plus":
        extra = [k for k in wit.terms if any(slot[0] for slot in k)]
        if extra:
            wit.offending.extend(extra)
            wit.member = False
    return wit


def _build(press, maps, values: dict):
    tpres = tuple(m.target for m in maps)
    if len(press) == 1:
        out = tpres[0].zero()
        for key, v in values.items():
            out = out + maps[0].image(key[0]).scale(QRatFunc(v))
        return out
    out = TensorPoly(tpres, {})
    for key, v in values.items():
        out = out + TensorPoly.tensor(*(m.image(k) for m, k in zip(maps, key))).scale(QRatFunc(v))
    return out


def specialize_element(x, target, method: str = "laurent"):
    """Image at q = 1 of a regular element (NCPoly, TensorPoly, or TSeries of those).

    ``target`` is a classical algebra built for the same root data, a
    SpecializationMap, or a tuple of either (one per tensor slot).
    Raises NotRegular if the element is not in the regular form.
    """
    if isinstance(x, TSeries):
        coeffs = [None if c is None else specialize_element(c, target, method) for c in x.coeffs]
        return TSeries(coeffs, x.order, specialize_element(x.unit, target, method))
    press, terms = _slots(x)
    tg = target if isinstance(target, tuple) else (target,) * len(press)
    maps = tuple(_as_map(p, t) for p, t in zip(press, tg))
    if method == "laurent":
        values = _laurent_route(press, terms)
    elif method == "witness":
        wit = _witness_route(press, terms)
        if not wit.member:
            k = wit.offending[0]
            raise NotRegular(-pole_order_at_one(wit.terms[k]), _describe(press, k))
        values = {k: specialize_scalar(v) for k, v in wit.terms.items()}
        values = {k: v for k, v in values.items() if v}
    else:
        raise ValueError(f"unknown method {method!r}")
    return _build(press, maps, values)

