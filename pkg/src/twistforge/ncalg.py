"""Presented noncommutative algebras over Q(q) and their normal forms.

A normal word has three blocks: lowering letters, a commutative cartan
monomial, raising letters.  Out-of-order adjacent letter pairs are rewritten
by two-letter rules; cartan symbols commute past letters by weight (a power of
q for invertible symbols, an additive shift for primitive ones).

Words are plain tuples ``(low, cart, high)`` of letter indices / exponents so
that they hash fast; :class:`NCPoly` wraps a ``{word: QRatFunc}`` dict.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .coeff import ONE, ZERO, QRatFunc, Scalar, as_scalar, format_qratfunc, parse_qratfunc, qpow

Word = tuple  # (low: tuple[int], cart: tuple[int], high: tuple[int])

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """Too many rewrite steps; signals a non-terminating rule set."""


class NotPBW(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    name: str
    sort: str  # "lowering" | "raising" | "generic"
    grading: tuple = ()

    def __post_init__(self):
        if self.sort not in ("lowering", "raising", "generic"):
            raise ValueError(f"bad sort {self.sort!r} for {self.name}")


@dataclass(frozen=True)
class CartanSymbol:
    """Commuting symbol; invertible ones act by q**pairing, primitive ones by +pairing."""

    name: str
    coweight: tuple
    invertible: bool = True


def _pair(coweight, grading):
    return sum(Fraction(a) * b for a, b in zip(coweight, grading))


class Presentation:
    """Generators, two-letter rewrite rules and the normal-form engine.

    ``rules`` maps ``(left_name, right_name)`` to an :class:`NCPoly` (or a
    ``{word: scalar}`` dict) equal to that product.  ``rule_provider``
    is consulted for pairs missing from ``rules``; it returns ``None`` when
    the pair is already in normal order.
    """

    def __init__(
        self,
        name: str,
        letters: Sequence[Letter],
        cartan: Sequence[CartanSymbol] = (),
        rules: dict | None = None,
        rule_provider: Callable | None = None,
        budget: int | None = None,
    ):
        self.name = name
        self.letters = tuple(letters)
        self.cartan = tuple(cartan)
        names = [x.name for x in self.letters] + [c.name for c in self.cartan]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        sorts = [x.sort == "lowering" for x in self.letters]
        if sorts != sorted(sorts, reverse=True):
            raise ValueError("lowering letters must precede the others")
        self.letter_index = {x.name: i for i, x in enumerate(self.letters)}
        self.cartan_index = {c.name: i for i, c in enumerate(self.cartan)}
        self.n_low = sum(sorts)
        self.ncart = len(self.cartan)
        self.zero_cart = (0,) * self.ncart
        self.one_word: Word = ((), self.zero_cart, ())
        self._rules: dict = {}
        self._no_rule: set = set()
        self.rule_provider = rule_provider
        for (a, b), rhs in (rules or {}).items():
            self.set_rule(a, b, rhs)
        if budget is None:
            budget = int(os.environ.get("TWISTFORGE_BUDGET", DEFAULT_BUDGET))
        self.budget = budget
        self._steps = 0
        self._depth = 0
        self._cache_tok: dict = {}
        self._cache_ww: dict = {}
        self._cache_move: dict = {}
        self._pairings = [
            tuple(_pair(c.coweight, x.grading) for c in self.cartan) for x in self.letters
        ]

    # -- generators ---------------------------------------------------------
    def is_lowering(self, i: int) -> bool:
        return i < self.n_low

    def grading(self, word: Word) -> tuple:
        low, _, high = word
        dims = len(self.letters[0].grading) if self.letters else 0
        out = [0] * dims
        for i in low + high:
            for k, g in enumerate(self.letters[i].grading):
                out[k] += g
        return tuple(out)

    def one(self) -> "NCPoly":
        return NCPoly(self, {self.one_word: ONE})

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def scalar(self, c: Scalar) -> "NCPoly":
        c = as_scalar(c)
        return NCPoly(self, {self.one_word: c} if c else {})

    def gen(self, name: str, exp: int = 1) -> "NCPoly":
        if name in self.cartan_index:
            i = self.cartan_index[name]
            if exp < 0 and not self.cartan[i].invertible:
                raise ValueError(f"{name} is not invertible")
            cart = list(self.zero_cart)
            cart[i] = exp
            return NCPoly(self, {((), tuple(cart), ()): ONE})
        if name not in self.letter_index:
            raise KeyError(f"unknown generator {name!r} in {self.name}")
        if exp < 0:
            raise ValueError(f"{name} is not invertible")
        out = self.one()
        g = NCPoly(self, {self._letter_word(self.letter_index[name]): ONE})
        for _ in range(exp):
            out = out * g
        return out

    def cartan_monomial(self, exps: dict) -> "NCPoly":
        cart = list(self.zero_cart)
        for n, e in exps.items():
            cart[self.cartan_index[n]] = e
        return NCPoly(self, {((), tuple(cart), ()): ONE})

    def _letter_word(self, i: int) -> Word:
        if self.is_lowering(i):
            return ((i,), self.zero_cart, ())
        return ((), self.zero_cart, (i,))

    def word_poly(self, word: Word, coeff: Scalar = ONE) -> "NCPoly":
        c = as_scalar(coeff)
        return NCPoly(self, {word: c} if c else {})

    # -- rules ----------------------------------------------------------------
    def set_rule(self, a, b, rhs) -> None:
        i = self.letter_index[a] if isinstance(a, str) else a
        j = self.letter_index[b] if isinstance(b, str) else b
        if isinstance(rhs, NCPoly):
            rhs = rhs.terms
        self._rules[(i, j)] = {w: as_scalar(c) for w, c in rhs.items() if as_scalar(c)}

    def rule(self, i: int, j: int):
        key = (i, j)
        r = self._rules.get(key)
        if r is not None:
            return r
        if key in self._no_rule:
            return None
        if self.rule_provider is not None:
            r = self.rule_provider(self, i, j)
            if r is not None:
                if isinstance(r, NCPoly):
                    r = r.terms
                self._rules[key] = r
                return r
        self._no_rule.add(key)
        return None

    def rules(self) -> dict:
        """All rules known so far, keyed by letter-name pairs."""
        return {(self.letters[i].name, self.letters[j].name): NCPoly(self, r) for (i, j), r in self._rules.items()}

    def force_rules(self) -> None:
        """Ask the provider for every out-of-order letter pair."""
        n = len(self.letters)
        for i in range(n):
            for j in range(n):
                if i > j or (self.is_lowering(j) and not self.is_lowering(i)):
                    self.rule(i, j)

    # -- the engine -------------------------------------------------------------
    def _tick(self):
        self._steps += 1
        if self._steps > self.budget:
            self._steps = 0
            raise BudgetExceeded(f"rewrite budget {self.budget} exceeded in {self.name}")

    def _cartan_commute(self, cart: tuple, grading: tuple, sign: int):
        """Move a cartan monomial past a letter of the given grading.

        sign=+1: K x = x * sum(c K'); sign=-1: x K = sum(c K') * x.
        """
        key = (cart, grading, sign)
        hit = self._cache_move.get(key)
        if hit is not None:
            return hit
        scal = 0
        terms = {cart: ONE}
        for s, (sym, m) in enumerate(zip(self.cartan, cart)):
            if m == 0:
                continue
            p = _pair(sym.coweight, grading)
            if p == 0:
                continue
            if sym.invertible:
                if p.denominator != 1:
                    raise ValueError("fractional q-power in cartan action")
                scal += sign * m * int(p)
            else:
                shift = sign * p
                new = {}
                for c, coef in terms.items():
                    for k in range(m + 1):
                        cc = list(c)
                        cc[s] = k
                        val = coef * QRatFunc(Fraction(comb(m, k)) * shift ** (m - k))
                        if val:
                            t = tuple(cc)
                            new[t] = new.get(t, ZERO) + val
                terms = {c: v for c, v in new.items() if v}
        if scal:
            f = qpow(scal)
            terms = {c: v * f for c, v in terms.items()}
        out = tuple(terms.items())
        self._cache_move[key] = out
        return out

    def _mul_letter(self, w: Word, x: int) -> dict:
        key = (w, x)
        hit = self._cache_tok.get(key)
        if hit is not None:
            return hit
        low, cart, high = w
        if not self.is_lowering(x):
            if high:
                r = self.rule(high[-1], x)
                if r is not None:
                    self._tick()
                    out = self._mul_word_poly((low, cart, high[:-1]), r)
                else:
                    out = {(low, cart, high + (x,)): ONE}
            else:
                out = {(low, cart, (x,)): ONE}
        elif high:
            r = self.rule(high[-1], x)
            if r is None:
                raise NotPBW(f"no rule to move {self.letters[x].name} past {self.letters[high[-1]].name}")
            self._tick()
            out = self._mul_word_poly((low, cart, high[:-1]), r)
        else:
            if low:
                r = self.rule(low[-1], x)
                if r is not None:
                    self._tick()
                    base = self._mul_word_poly((low[:-1], self.zero_cart, ()), r)
                else:
                    base = {(low + (x,), self.zero_cart, ()): ONE}
            else:
                base = {((x,), self.zero_cart, ()): ONE}
            if any(cart):
                out = {}
                for c2, coef in self._cartan_commute(cart, self.letters[x].grading, +1):
                    for bw, bc in base.items():
                        for rw, rc in self._mul_cartan(bw, c2).items():
                            v = out.get(rw, ZERO) + coef * bc * rc
                            if v:
                                out[rw] = v
                            else:
                                out.pop(rw, None)
            else:
                out = base
        self._cache_tok[key] = out
        return out

    def _mul_cartan(self, w: Word, c: tuple) -> dict:
        low, cart, high = w
        if not any(c):
            return {w: ONE}
        if not high:
            return {(low, tuple(a + b for a, b in zip(cart, c)), high): ONE}
        out = {}
        for c2, coef in self._cartan_commute(c, self.grading(((), (), high)), -1):
            nw = (low, tuple(a + b for a, b in zip(cart, c2)), high)
            out[nw] = out.get(nw, ZERO) + coef
        return {k: v for k, v in out.items() if v}

    def _mul_word_poly(self, w: Word, poly: dict) -> dict:
        out: dict = {}
        for pw, pc in poly.items():
            for rw, rc in self.mul_words(w, pw).items():
                v = out.get(rw, ZERO) + pc * rc
                if v:
                    out[rw] = v
                else:
                    out.pop(rw, None)
        return out

    def mul_words(self, w1: Word, w2: Word) -> dict:
        """Normal form of the product of two normal words."""
        key = (w1, w2)
        hit = self._cache_ww.get(key)
        if hit is not None:
            return hit
        if self._depth == 0:
            self._steps = 0
        self._depth += 1
        try:
            if w2 == self.one_word:
                out = {w1: ONE}
            elif w1 == self.one_word:
                out = {w2: ONE}
            else:
                low2, cart2, high2 = w2
                cur = {w1: ONE}
                for x in low2:
                    cur = self._poly_token(cur, lambda w, x=x: self._mul_letter(w, x))
                if any(cart2):
                    cur = self._poly_token(cur, lambda w: self._mul_cartan(w, cart2))
                for x in high2:
                    cur = self._poly_token(cur, lambda w, x=x: self._mul_letter(w, x))
                out = cur
        finally:
            self._depth -= 1
            if self._depth == 0:
                self._steps = 0
        self._cache_ww[key] = out
        return out

    @staticmethod
    def _poly_token(cur: dict, fn) -> dict:
        out: dict = {}
        for w, c in cur.items():
            for rw, rc in fn(w).items():
                v = out.get(rw, ZERO) + c * rc
                if v:
                    out[rw] = v
                else:
                    out.pop(rw, None)
        return out

    # -- raw words ---------------------------------------------------------
    def tokens_of(self, word: Word) -> tuple:
        """Raw token sequence for a normal word (letters as ints, cartan as (sym, exp))."""
        low, cart, high = word
        toks = [("l", i) for i in low]
        toks += [("c", s, e) for s, e in enumerate(cart) if e]
        toks += [("l", i) for i in high]
        return tuple(toks)

    def parse_tokens(self, spec: Iterable) -> tuple:
        """Turn ``[(name, exp), ...]`` into raw tokens."""
        toks = []
        for item in spec:
            name, e = (item, 1) if isinstance(item, str) else item
            if name in self.cartan_index:
                toks.append(("c", self.cartan_index[name], e))
            else:
                if e < 0:
                    raise ValueError(f"{name} is not invertible")
                toks.extend([("l", self.letter_index[name])] * e)
        return tuple(toks)

    def reduce_tokens(self, toks: Sequence) -> "NCPoly":
        """Normal form of a raw token word with the structured (left-to-right) strategy."""
        self._steps = 0
        cur = {self.one_word: ONE}
        for t in toks:
            if t[0] == "l":
                cur = self._poly_token(cur, lambda w, x=t[1]: self._mul_letter(w, x))
            else:
                c = [0] * self.ncart
                c[t[1]] = t[2]
                cur = self._poly_token(cur, lambda w, c=tuple(c): self._mul_cartan(w, c))
        return NCPoly(self, cur)

    def reduce_tokens_naive(self, toks: Sequence, strategy: str = "random", rng: random.Random | None = None) -> "NCPoly":
        """Normal form by exhaustive single-redex rewriting of raw words.

        ``strategy`` picks the redex: ``leftmost``, ``rightmost`` or ``random``.
        Independent of the structured multiplication path; used to cross-check it.
        """
        rng = rng or random.Random(0)
        work = {tuple(toks): ONE}
        done: dict = {}
        steps = 0
        while work:
            raw, coef = work.popitem()
            redexes = self._redexes(raw)
            if not redexes:
                w = self._raw_to_word(raw)
                v = done.get(w, ZERO) + coef
                if v:
                    done[w] = v
                else:
                    done.pop(w, None)
                continue
            steps += 1
            if steps > self.budget:
                raise BudgetExceeded("naive rewriting exceeded budget")
            if strategy == "leftmost":
                pos = redexes[0]
            elif strategy == "rightmost":
                pos = redexes[-1]
            else:
                pos = rng.choice(redexes)
            for new, c in self._rewrite_at(raw, pos):
                v = work.get(new, ZERO) + coef * c
                if v:
                    work[new] = v
                else:
                    work.pop(new, None)
        return NCPoly(self, done)

    def _tok_class(self, t) -> int:
        if t[0] == "c":
            return 1
        return 0 if self.is_lowering(t[1]) else 2

    def _redexes(self, raw) -> list:
        out = []
        for p in range(len(raw) - 1):
            a, b = raw[p], raw[p + 1]
            ca, cb = self._tok_class(a), self._tok_class(b)
            if ca == 1 and cb == 1:
                if a[1] >= b[1]:
                    out.append(p)
            elif ca > cb:
                out.append(p)
            elif ca == cb and self.rule(a[1], b[1]) is not None:
                out.append(p)
        for p, t in enumerate(raw):
            if t[0] == "c" and t[2] == 0:
                out.append(p)
        return sorted(set(out))

    def _rewrite_at(self, raw, p):
        a = raw[p]
        if a[0] == "c" and a[2] == 0:
            return [(raw[:p] + raw[p + 1:], ONE)]
        b = raw[p + 1]
        pre, post = raw[:p], raw[p + 2:]
        ca, cb = self._tok_class(a), self._tok_class(b)
        if ca == 1 and cb == 1:
            if a[1] == b[1]:
                e = a[2] + b[2]
                mid = (("c", a[1], e),) if e else ()
                return [(pre + mid + post, ONE)]
            return [(pre + (b, a) + post, ONE)]
        if ca == 1:  # cartan before lowering letter: K x = x K'
            return self._raw_cartan_move(pre, a, b, post, +1)
        if cb == 1:  # raising letter before cartan: x K = K' x
            return self._raw_cartan_move(pre, b, a, post, -1)
        r = self.rule(a[1], b[1])
        if r is None:
            raise NotPBW(f"no rule for {self.letters[a[1]].name} {self.letters[b[1]].name}")
        return [(pre + self.tokens_of(w) + post, c) for w, c in r.items()]

    def _raw_cartan_move(self, pre, ctok, ltok, post, sign):
        cart = [0] * self.ncart
        cart[ctok[1]] = ctok[2]
        out = []
        for c2, coef in self._cartan_commute(tuple(cart), self.letters[ltok[1]].grading, sign):
            ct = tuple(("c", s, e) for s, e in enumerate(c2) if e)
            mid = (ltok,) + ct if sign > 0 else ct + (ltok,)
            out.append((pre + mid + post, coef))
        return out

    def _raw_to_word(self, raw) -> Word:
        low, high = [], []
        cart = [0] * self.ncart
        for t in raw:
            if t[0] == "c":
                cart[t[1]] += t[2]
            elif self.is_lowering(t[1]):
                low.append(t[1])
            else:
                high.append(t[1])
        return (tuple(low), tuple(cart), tuple(high))

    # -- printing / serialization -------------------------------------------
    def format_word(self, w: Word) -> str:
        low, cart, high = w
        parts = []

        def run(seq):
            i = 0
            while i < len(seq):
                j = i
                while j < len(seq) and seq[j] == seq[i]:
                    j += 1
                n = self.letters[seq[i]].name
                parts.append(n if j - i == 1 else f"{n}^{j - i}")
                i = j

        run(low)
        for s, e in enumerate(cart):
            if e:
                n = self.cartan[s].name
                parts.append(n if e == 1 else f"{n}^{e}")
        run(high)
        return "*".join(parts) if parts else "1"

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text == "1":
            return self.one_word
        toks = []
        for part in text.split("*"):
            name, _, e = part.partition("^")
            toks.append((name, int(e) if e else 1))
        raw = self.parse_tokens(toks)
        nf = self.reduce_tokens(raw)
        if len(nf.terms) != 1 or next(iter(nf.terms.values())) != ONE:
            raise ValueError(f"{text!r} is not a normal word")
        return next(iter(nf.terms))

    def to_json(self) -> str:
        """Generators and every known rule; deterministic."""
        self.force_rules()
        data = {
            "name": self.name,
            "letters": [{"name": x.name, "sort": x.sort, "grading": list(x.grading)} for x in self.letters],
            "cartan": [
                {"name": c.name, "coweight": [str(Fraction(v)) for v in c.coweight], "invertible": c.invertible}
                for c in self.cartan
            ],
            "rules": [
                {"left": f"{self.letters[i].name}*{self.letters[j].name}", "right": NCPoly(self, r).serialize()}
                for (i, j), r in sorted(self._rules.items())
            ],
        }
        return json.dumps(data, sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        data = json.loads(text)
        letters = [Letter(x["name"], x["sort"], tuple(x["grading"])) for x in data["letters"]]
        cartan = [CartanSymbol(c["name"], tuple(Fraction(v) for v in c["coweight"]), c["invertible"]) for c in data["cartan"]]
        p = cls(data["name"], letters, cartan)
        for r in data["rules"]:
            a, b = r["left"].split("*")
            p.set_rule(a, b, NCPoly.deserialize(p, r["right"]))
        return p

    def __repr__(self):
        return f"Presentation({self.name!r}, {len(self.letters)} letters, {self.ncart} cartan)"


class NCPoly:
    """Linear combination of normal words with Q(q) coefficients."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict | None = None):
        self.pres = pres
        self.terms = terms if terms is not None else {}

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = self.pres.scalar(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCPoly(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            other = self.pres.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "NCPoly":
        c = as_scalar(c)
        if not c:
            return NCPoly(self.pres, {})
        return NCPoly(self.pres, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return nc_multiply(self, other)
        if isinstance(other, (QRatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (QRatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = self.pres.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QRatFunc)):
            other = self.pres.scalar(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def coeff(self, word: Word) -> QRatFunc:
        return self.terms.get(word, ZERO)

    def scalar_part(self) -> QRatFunc:
        return self.coeff(self.pres.one_word)

    def gradings(self) -> set:
        return {self.pres.grading(w) for w in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: _word_key(wc[0]))

    def serialize(self) -> list:
        return [f"{format_qratfunc(c)} * {self.pres.format_word(w)}" for w, c in self.sorted_terms()]

    @classmethod
    def deserialize(cls, pres: Presentation, items: list) -> "NCPoly":
        out = {}
        for s in items:
            c, _, w = s.rpartition(" * ")
            out[pres.parse_word(w)] = parse_qratfunc(c)
        return NCPoly(pres, out)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({format_qratfunc(c)})*{self.pres.format_word(w)}" for w, c in self.sorted_terms())

    __repr__ = __str__


def _word_key(w: Word):
    low, cart, high = w
    return (len(low) + len(high), low, cart, high)


# ---------------------------------------------------------------------------
# operations


def normal_form(x, p: Presentation | None = None) -> NCPoly:
    """Normal form of an NCPoly or of a raw token word / ``[(name, exp), ...]`` spec."""
    if isinstance(x, NCPoly):
        return x
    if p is None:
        raise ValueError("a presentation is required for raw input")
    toks = tuple(x)
    if toks and not (isinstance(toks[0], tuple) and toks[0][0] in ("l", "c") and len(toks[0]) in (2, 3) and isinstance(toks[0][1], int)):
        toks = p.parse_tokens(toks)
    return p.reduce_tokens(toks)


def nc_multiply(a: NCPoly, b: NCPoly) -> NCPoly:
    if a.pres is not b.pres:
        raise ValueError("operands belong to different presentations")
    p = a.pres
    out: dict = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            c12 = c1 * c2
            for w, c in p.mul_words(w1, w2).items():
                v = out.get(w, ZERO) + c12 * c
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
    return NCPoly(p, out)


def q_commutator(a: NCPoly, b: NCPoly, v: Scalar = 1) -> NCPoly:
    """``a*b - v*b*a``."""
    return a * b - (b * a).scale(v)


@dataclass
class ConfluenceReport:
    presentation: str
    degree: int
    trials: int
    divergences: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.divergences

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation,
            "degree": self.degree,
            "trials": self.trials,
            "divergences": list(self.divergences),
            "pass": self.passed,
        }


def random_raw_word(p: Presentation, degree: int, rng: random.Random, alphabet: Sequence | None = None) -> tuple:
    if alphabet is None:
        alphabet = [("l", i) for i in range(len(p.letters))]
        for s, c in enumerate(p.cartan):
            alphabet.append(("c", s, 1))
            if c.invertible:
                alphabet.append(("c", s, -1))
    n = rng.randint(1, degree)
    return tuple(rng.choice(alphabet) for _ in range(n))


def confluence_smoke_check(p: Presentation, degree: int, trials: int, seed: int = 0, alphabet=None) -> ConfluenceReport:
    """Reduce random raw words by the structured path and by random single-redex rewriting."""
    rng = random.Random(seed)
    rep = ConfluenceReport(p.name, degree, trials)
    for _ in range(trials):
        raw = random_raw_word(p, degree, rng, alphabet)
        a = p.reduce_tokens(raw)
        b = p.reduce_tokens_naive(raw, "random", rng)
        if a != b:
            rep.divergences.append(_format_raw(p, raw))
    return rep


def overlap_check(p: Presentation) -> list:
    """Resolve every letter overlap x*y*z (rules on xy and yz) both ways.

    Returns the list of unresolved overlaps; empty means the two-letter rule
    set is locally confluent on letters.
    """
    p.force_rules()
    bad = []
    n = len(p.letters)
    for i in range(n):
        for j in range(n):
            rij = p.rule(i, j) if (i > j or (p.is_lowering(j) and not p.is_lowering(i))) else None
            if rij is None:
                continue
            for k in range(n):
                rjk = p.rule(j, k) if (j > k or (p.is_lowering(k) and not p.is_lowering(j))) else None
                if rjk is None:
                    continue
                wk = p._letter_word(k)
                wi = p._letter_word(i)
                left = NCPoly(p, p._mul_word_poly(p.one_word, rij)) * NCPoly(p, {wk: ONE})
                right = NCPoly(p, {wi: ONE}) * NCPoly(p, rjk)
                if left != right:
                    bad.append((p.letters[i].name, p.letters[j].name, p.letters[k].name))
    return bad


def _format_raw(p: Presentation, raw) -> str:
    out = []
    for t in raw:
        if t[0] == "l":
            out.append(p.letters[t[1]].name)
        else:
            out.append(f"{p.cartan[t[1]].name}^{t[2]}")
    return "*".join(out)


def free_algebra(names: Sequence[str], name: str = "free") -> Presentation:
    return Presentation(name, [Letter(n, "generic", (0,)) for n in names])
