"""Hopf structure on presented algebras, tensor powers and truncated t-series."""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from math import factorial
from typing import Callable, Sequence

from .coeff import ONE, ZERO, QConvention, QRatFunc, Scalar, as_scalar, format_qratfunc, qpow, q_factorial
from .ncalg import NCPoly, Presentation, Word


class NotInvertible(ArithmeticError):
    pass


def _acc(out: dict, key, val) -> None:
    v = out.get(key, ZERO) + val
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class TensorPoly:
    """Element of A1 (x) ... (x) Ar, each slot a normal word of its presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Sequence[Presentation], terms: dict | None = None):
        self.pres = tuple(pres)
        self.terms = terms if terms is not None else {}

    @property
    def rank(self) -> int:
        return len(self.pres)

    @classmethod
    def tensor(cls, *polys: NCPoly) -> "TensorPoly":
        pres = tuple(p.pres for p in polys)
        out: dict = {}
        for combo in _cartesian(*[list(p.terms.items()) for p in polys]):
            c = ONE
            for _, v in combo:
                c = c * v
            _acc(out, tuple(w for w, _ in combo), c)
        return cls(pres, out)

    @classmethod
    def one(cls, pres: Sequence[Presentation]) -> "TensorPoly":
        return cls(pres, {tuple(p.one_word for p in pres): ONE})

    def one_like(self) -> "TensorPoly":
        return TensorPoly.one(self.pres)

    def zero_like(self) -> "TensorPoly":
        return TensorPoly(self.pres, {})

    def _check(self, other: "TensorPoly"):
        if self.pres != other.pres:
            raise ValueError("tensor operands live in different spaces")

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            other = self.one_like().scale(other)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return TensorPoly(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorPoly(self.pres, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorPoly):
            other = self.one_like().scale(other)
        return self + (-other)

    def scale(self, c: Scalar) -> "TensorPoly":
        c = as_scalar(c)
        if not c:
            return self.zero_like()
        return TensorPoly(self.pres, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (QRatFunc, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        pres = self.pres
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                slot_prods = [list(p.mul_words(a, b).items()) for p, a, b in zip(pres, k1, k2)]
                if len(slot_prods) == 2:
                    for w1, d1 in slot_prods[0]:
                        cd = c * d1
                        for w2, d2 in slot_prods[1]:
                            _acc(out, (w1, w2), cd * d2)
                else:
                    for combo in _cartesian(*slot_prods):
                        d = c
                        for _, v in combo:
                            d = d * v
                        _acc(out, tuple(w for w, _ in combo), d)
        return TensorPoly(pres, out)

    def __rmul__(self, other):
        if isinstance(other, (QRatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = self.one_like()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QRatFunc)):
            other = self.one_like().scale(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.pres == other.pres and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def permute(self, perm: Sequence[int]) -> "TensorPoly":
        """Slot i of the result is slot perm[i] of self (perm=(1,0) is the flip)."""
        pres = tuple(self.pres[i] for i in perm)
        return TensorPoly(pres, {tuple(k[i] for i in perm): v for k, v in self.terms.items()})

    def flip(self) -> "TensorPoly":
        return self.permute((1, 0))

    def embed(self, positions: Sequence[int], pres: Sequence[Presentation]) -> "TensorPoly":
        """Place the slots at ``positions`` of a longer tensor, ones elsewhere (F -> F^{12}, F^{23})."""
        out = {}
        for k, v in self.terms.items():
            full = [p.one_word for p in pres]
            for pos, w in zip(positions, k):
                full[pos] = w
            out[tuple(full)] = v
        return TensorPoly(pres, out)

    def map_slot(self, i: int, fn: Callable, new_pres: Sequence[Presentation] | None = None) -> "TensorPoly":
        """Apply a linear map to slot i.  ``fn(word)`` returns an NCPoly, TensorPoly or scalar."""
        new_slots: list = []
        out: dict = {}
        target = None
        for k, v in self.terms.items():
            img = fn(k[i])
            if isinstance(img, NCPoly):
                items = [((w,), c) for w, c in img.terms.items()]
                ins = (img.pres,)
            elif isinstance(img, TensorPoly):
                items = list(img.terms.items())
                ins = img.pres
            else:
                items = [((), as_scalar(img))] if as_scalar(img) else []
                ins = ()
            if target is None:
                target = self.pres[:i] + ins + self.pres[i + 1:]
            for sub, c in items:
                _acc(out, k[:i] + sub + k[i + 1:], v * c)
        if target is None:
            target = tuple(new_pres) if new_pres is not None else self.pres
        return TensorPoly(target, out)

    def slot_polys(self) -> list:
        """Terms as lists of per-slot NCPolys (for printing and mapping)."""
        return [([NCPoly(p, {w: ONE}) for p, w in zip(self.pres, k)], c) for k, c in self.sorted_terms()]

    def sorted_terms(self):
        from .ncalg import _word_key

        return sorted(self.terms.items(), key=lambda kc: tuple(_word_key(w) for w in kc[0]))

    def serialize(self) -> list:
        return [
            f"{format_qratfunc(c)} * " + " ox ".join(p.format_word(w) for p, w in zip(self.pres, k))
            for k, c in self.sorted_terms()
        ]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({format_qratfunc(c)})*" + " ox ".join(p.format_word(w) for p, w in zip(self.pres, k))
            for k, c in self.sorted_terms()
        )

    __repr__ = __str__


def tensor(*polys: NCPoly) -> TensorPoly:
    return TensorPoly.tensor(*polys)


# ---------------------------------------------------------------------------
# truncated power series in t


def _is_zero(x) -> bool:
    return x is None or not x


class TSeries:
    """Power series in t with algebra-valued coefficients, truncated at ``order``."""

    __slots__ = ("coeffs", "order", "unit")

    def __init__(self, coeffs: Sequence, order: int, unit):
        self.order = order
        self.unit = unit
        cs = list(coeffs)[: order + 1]
        cs += [None] * (order + 1 - len(cs))
        self.coeffs = [None if _is_zero(c) else c for c in cs]

    @classmethod
    def constant(cls, x, order: int) -> "TSeries":
        return cls([x], order, x.one_like() if isinstance(x, TensorPoly) else x.pres.one())

    @classmethod
    def one(cls, unit, order: int) -> "TSeries":
        return cls([unit], order, unit)

    @classmethod
    def monomial(cls, x, degree: int, order: int) -> "TSeries":
        unit = x.one_like() if isinstance(x, TensorPoly) else x.pres.one()
        return cls([None] * degree + [x], order, unit)

    def zero_elem(self):
        return self.unit - self.unit

    def coeff(self, n: int):
        if n > self.order:
            raise IndexError("beyond truncation order")
        c = self.coeffs[n]
        return self.zero_elem() if c is None else c

    def _lift(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            return other
        if isinstance(other, (NCPoly, TensorPoly)):
            return TSeries([other], self.order, self.unit)
        return TSeries([self.unit.scale(other)], self.order, self.unit)

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        out = []
        for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]):
            out.append(b if a is None else (a if b is None else a + b))
        return TSeries(out, n, self.unit)

    __radd__ = __add__

    def __neg__(self):
        return TSeries([None if c is None else -c for c in self.coeffs], self.order, self.unit)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "TSeries":
        return TSeries([None if x is None else x.scale(c) for x in self.coeffs], self.order, self.unit)

    def __mul__(self, other):
        if isinstance(other, (QRatFunc, int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        n = min(self.order, other.order)
        out = [None] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a is None:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b is None:
                    continue
                p = a * b
                out[i + j] = p if out[i + j] is None else out[i + j] + p
        return TSeries(out, n, self.unit)

    def __rmul__(self, other):
        if isinstance(other, (QRatFunc, int, Fraction)):
            return self.scale(other)
        return self._lift(other) * self

    def __pow__(self, n: int):
        out = TSeries.one(self.unit, self.order)
        for _ in range(n):
            out = out * self
        return out

    def inv(self) -> "TSeries":
        a0 = self.coeffs[0]
        if a0 is None or a0 != self.unit:
            raise NotInvertible("degree-0 coefficient is not the identity")
        b = [self.unit] + [None] * self.order
        for n in range(1, self.order + 1):
            acc = None
            for k in range(1, n + 1):
                ak, bk = self.coeffs[k], b[n - k]
                if ak is None or bk is None:
                    continue
                p = ak * bk
                acc = p if acc is None else acc + p
            b[n] = None if acc is None else -acc
        return TSeries(b, self.order, self.unit)

    def map(self, fn: Callable, unit=None) -> "TSeries":
        """Coefficient-wise linear map."""
        if unit is None:
            unit = fn(self.unit)
        return TSeries([None if c is None else fn(c) for c in self.coeffs], self.order, unit)

    def substitute_t(self, c: Scalar) -> "TSeries":
        """t -> c*t."""
        c = as_scalar(c)
        return TSeries([None if x is None else x.scale(c ** n) for n, x in enumerate(self.coeffs)], self.order, self.unit)

    def truncate(self, order: int) -> "TSeries":
        return TSeries(self.coeffs[: order + 1], min(order, self.order), self.unit)

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            other = self._lift(other)
        n = min(self.order, other.order)
        return all(
            (a is None and b is None) or (a is not None and b is not None and a == b) or (_is_zero(a) and _is_zero(b))
            for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])
        )

    def residual_counts(self, other: "TSeries") -> list:
        """Number of surviving terms of self - other at each t-degree."""
        d = self - other
        return [0 if c is None else len(c) for c in d.coeffs]

    def serialize(self) -> list:
        return [[n, c.serialize()] for n, c in enumerate(self.coeffs) if c is not None]

    def __str__(self):
        parts = [f"t^{n}: {c}" for n, c in enumerate(self.coeffs) if c is not None]
        return "TSeries(" + "; ".join(parts) + f"; O(t^{self.order + 1}))"

    __repr__ = __str__


def _as_series(x, order: int) -> TSeries:
    if isinstance(x, TSeries):
        return x
    return TSeries.constant(x, order)


def series_from_terms(x, weights: Sequence, order: int, t_degree: int = 1) -> TSeries:
    """sum_n weights[n] * (t^d x)^n; x is an element or a series (its own t-dependence kept)."""
    if isinstance(x, TSeries):
        unit = x.unit
        step = x.truncate(order)
    else:
        unit = x.one_like() if isinstance(x, TensorPoly) else x.pres.one()
        step = TSeries([x], order, unit)
    if t_degree:
        step = step * TSeries.monomial(unit, t_degree, order)
    if step.coeffs[0] is not None:
        raise ValueError("argument must have zero constant term")
    out = TSeries.one(unit, order)
    power = TSeries.one(unit, order)
    for n in range(1, order + 1):
        power = power * step
        if all(c is None for c in power.coeffs):
            break
        w = as_scalar(weights[n]) if n < len(weights) else ZERO
        if w:
            out = out + power.scale(w)
    return out


def q_exp_series(x, base, prefactor: Scalar = 1, order: int = 4, t_degree: int = 1) -> TSeries:
    """exp_b(c t^d x) = sum_n (c t^d x)^n / (n)_b!  with b = q**base (or a QConvention)."""
    if isinstance(base, QConvention):
        base = base.base
    c = as_scalar(prefactor)
    weights = [ONE]
    cn = ONE
    for n in range(1, order + 1):
        cn = cn * c
        weights.append(cn / q_factorial(n, QConvention("onesided", base)))
    return series_from_terms(x, weights, order, t_degree)


def exp_series(x, prefactor: Scalar = 1, order: int = 4, t_degree: int = 1) -> TSeries:
    """Ordinary exponential exp(c t^d x)."""
    c = as_scalar(prefactor)
    weights = [ONE]
    cn = ONE
    for n in range(1, order + 1):
        cn = cn * c
        weights.append(cn * QRatFunc(Fraction(1, factorial(n))))
    return series_from_terms(x, weights, order, t_degree)


def geometric_series(x, prefactor: Scalar = 1, order: int = 4, t_degree: int = 1) -> TSeries:
    """1/(1 - c t^d x) = sum_n c^n t^(dn) x^n."""
    c = as_scalar(prefactor)
    weights = [ONE]
    for n in range(1, order + 1):
        weights.append(weights[-1] * c)
    return series_from_terms(x, weights, order, t_degree)


# ---------------------------------------------------------------------------
# Hopf presentations


class HopfPresentation:
    """Presentation plus Delta, epsilon and S on every letter.

    Cartan symbols are grouplike when invertible and primitive otherwise;
    their Hopf data is implied.  ``delta``/``counit``/``antipode`` map letter
    names to TensorPoly / scalar / NCPoly (callables are accepted and
    evaluated lazily, which composite letters use).
    """

    def __init__(self, pres: Presentation, delta: dict, counit: dict | None = None, antipode: dict | None = None):
        self.pres = pres
        self._delta = dict(delta)
        self._counit = dict(counit or {})
        self._antipode = dict(antipode or {})
        self._dcache: dict = {}
        self._scache: dict = {}
        self._ecache: dict = {}
        self.pres2 = (pres, pres)
        self.pres3 = (pres, pres, pres)

    @property
    def name(self) -> str:
        return self.pres.name

    def _letter_delta(self, i: int) -> TensorPoly:
        name = self.pres.letters[i].name
        d = self._delta[name]
        if callable(d):
            d = d()
            self._delta[name] = d
        return d

    def _letter_antipode(self, i: int) -> NCPoly:
        name = self.pres.letters[i].name
        s = self._antipode[name]
        if callable(s):
            s = s()
            self._antipode[name] = s
        return s

    def _letter_counit(self, i: int) -> QRatFunc:
        return as_scalar(self._counit.get(self.pres.letters[i].name, 0))

    def _cartan_delta(self, cart: tuple) -> TensorPoly:
        p = self.pres
        group = tuple(e if p.cartan[s].invertible else 0 for s, e in enumerate(cart))
        out = TensorPoly(self.pres2, {(((), group, ()), ((), group, ())): ONE})
        for s, e in enumerate(cart):
            if e and not p.cartan[s].invertible:
                h = [0] * p.ncart
                h[s] = 1
                hw = ((), tuple(h), ())
                prim = TensorPoly(self.pres2, {(hw, p.one_word): ONE, (p.one_word, hw): ONE})
                for _ in range(e):
                    out = out * prim
        return out

    def delta_word(self, w: Word) -> TensorPoly:
        hit = self._dcache.get(w)
        if hit is not None:
            return hit
        low, cart, high = w
        p = self.pres
        if w == p.one_word:
            out = TensorPoly.one(self.pres2)
        elif high:
            out = self.delta_word((low, cart, high[:-1])) * self._letter_delta(high[-1])
        elif any(cart):
            out = self.delta_word((low, p.zero_cart, ())) * self._cartan_delta(cart)
        else:
            out = self.delta_word((low[:-1], cart, ())) * self._letter_delta(low[-1])
        self._dcache[w] = out
        return out

    def counit_word(self, w: Word) -> QRatFunc:
        hit = self._ecache.get(w)
        if hit is not None:
            return hit
        low, cart, high = w
        p = self.pres
        val = ONE
        for i in low + high:
            val = val * self._letter_counit(i)
            if not val:
                break
        if val:
            for s, e in enumerate(cart):
                if e and not p.cartan[s].invertible:
                    val = ZERO
                    break
        self._ecache[w] = val
        return val

    def antipode_word(self, w: Word) -> NCPoly:
        hit = self._scache.get(w)
        if hit is not None:
            return hit
        p = self.pres
        low, cart, high = w
        if w == p.one_word:
            out = p.one()
        elif high:
            out = self._letter_antipode(high[-1]) * self.antipode_word((low, cart, high[:-1]))
        elif any(cart):
            group = tuple(-e if p.cartan[s].invertible else 0 for s, e in enumerate(cart))
            out = p.word_poly(((), group, ()))
            for s, e in enumerate(cart):
                if e and not p.cartan[s].invertible:
                    h = [0] * p.ncart
                    h[s] = 1
                    mh = p.word_poly(((), tuple(h), ()), -1)
                    for _ in range(e):
                        out = mh * out
            out = out * self.antipode_word((low, p.zero_cart, ()))
        else:
            out = self._letter_antipode(low[-1]) * self.antipode_word((low[:-1], cart, ()))
        self._scache[w] = out
        return out


def coproduct(x, h: HopfPresentation):
    """Delta of an NCPoly (TensorPoly of rank 2) or of a TSeries of NCPolys."""
    if isinstance(x, TSeries):
        return x.map(lambda c: coproduct(c, h))
    out = TensorPoly(h.pres2, {})
    acc: dict = {}
    for w, c in x.terms.items():
        for k, v in h.delta_word(w).terms.items():
            _acc(acc, k, c * v)
    out.terms = acc
    return out


def counit(x, h: HopfPresentation) -> QRatFunc:
    tot = ZERO
    for w, c in x.terms.items():
        tot = tot + c * h.counit_word(w)
    return tot


def antipode(x, h: HopfPresentation) -> NCPoly:
    out = h.pres.zero()
    for w, c in x.terms.items():
        out = out + h.antipode_word(w).scale(c)
    return out


def counit_antipode(x, h: HopfPresentation, which: str):
    if which == "counit":
        return counit(x, h)
    if which == "antipode":
        return antipode(x, h)
    raise ValueError(f"unknown operation {which!r}")


def delta_slot(T, i: int, h: HopfPresentation):
    """Apply Delta to slot i of a TensorPoly (rank goes up by one); TSeries accepted."""
    if isinstance(T, TSeries):
        return T.map(lambda c: delta_slot(c, i, h))
    return T.map_slot(i, lambda w: h.delta_word(w))


def counit_slot(T, i: int, h: HopfPresentation):
    if isinstance(T, TSeries):
        return T.map(lambda c: counit_slot(c, i, h))
    return T.map_slot(i, lambda w: h.counit_word(w))


def multiply_slots(T: TensorPoly) -> NCPoly:
    """m: A (x) A -> A."""
    p = T.pres[0]
    out: dict = {}
    for (a, b), c in T.terms.items():
        for w, v in p.mul_words(a, b).items():
            _acc(out, w, c * v)
    return NCPoly(p, out)


def antipode_slot(T: TensorPoly, i: int, h: HopfPresentation) -> TensorPoly:
    return T.map_slot(i, lambda w: h.antipode_word(w))


def hopf_axiom_check(h: HopfPresentation, extra: Sequence[NCPoly] = ()) -> dict:
    """Coassociativity, counit, antipode on generators; Delta/epsilon/S respect every rule.

    Returns ``{check_name: [failing items]}``; all lists empty means pass.
    """
    p = h.pres
    gens = [NCPoly(p, {p._letter_word(i): ONE}) for i in range(len(p.letters))]
    names = [x.name for x in p.letters]
    for s, c in enumerate(p.cartan):
        cart = [0] * p.ncart
        cart[s] = 1
        gens.append(p.word_poly(((), tuple(cart), ())))
        names.append(c.name)
        if c.invertible:
            cart[s] = -1
            gens.append(p.word_poly(((), tuple(cart), ())))
            names.append(c.name + "^-1")
    for j, x in enumerate(extra):
        gens.append(x)
        names.append(f"extra{j}")
    fails: dict = {"coassociativity": [], "counit": [], "antipode": [], "relations": []}
    for name, g in zip(names, gens):
        d = coproduct(g, h)
        if delta_slot(d, 0, h) != delta_slot(d, 1, h):
            fails["coassociativity"].append(name)
        g2 = TensorPoly.tensor(g)
        if counit_slot(d, 0, h) != g2 or counit_slot(d, 1, h) != g2:
            fails["counit"].append(name)
        eps = p.scalar(counit(g, h))
        if multiply_slots(antipode_slot(d, 0, h)) != eps or multiply_slots(antipode_slot(d, 1, h)) != eps:
            fails["antipode"].append(name)
    p.force_rules()
    for (a, b), rhs in sorted(p.rules().items()):
        ga, gb = p.gen(a), p.gen(b)
        lhs_d = coproduct(ga, h) * coproduct(gb, h)
        if lhs_d != coproduct(rhs, h):
            fails["relations"].append(f"Delta {a}*{b}")
        if counit(ga, h) * counit(gb, h) != counit(rhs, h):
            fails["relations"].append(f"eps {a}*{b}")
        if antipode(gb, h) * antipode(ga, h) != antipode(rhs, h):
            fails["relations"].append(f"S {a}*{b}")
    return fails
