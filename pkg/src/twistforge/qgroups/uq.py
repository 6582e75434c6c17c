"""Quantized enveloping algebras with Cartan-Weyl (PBW) letters.

Letters are all root vectors: f_gamma (in reverse order of the normal
ordering) then e_gamma (in the normal ordering).  Straightening rules are
derived on demand:

* e-e: exact linear algebra in the quantum shuffle algebra;
* f-f: transported from e-e by the anti-automorphism e_i <-> f_i, k -> k,
  q -> q^{-1}, so f_gamma = f_beta f_alpha - q^{(alpha,beta)} f_alpha f_beta;
* e-f: recursion on the composite-root recipes down to
  e_i f_j - f_j e_i = delta_ij (K_i - K_i^{-1})/(q - q^{-1}).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from ..coeff import ONE, QRatFunc, Q, qpow
from ..hopf import HopfPresentation, TensorPoly, coproduct
from ..ncalg import CartanSymbol, Letter, NCPoly, Presentation, q_commutator
from .roots import (
    AmbiguousDecomposition,
    NormalOrdering,
    RootSystem,
    build_root_system,
    decomposition,
    standard_normal_ordering,
)
from .shuffle import RootVectorImages


@dataclass
class SimpleHopfData:
    """Delta(e_i) = k^A (x) e_i + e_i (x) k^B,  Delta(f_i) = f_i (x) k^C + k^D (x) f_i."""

    A: tuple
    B: tuple
    C: tuple
    D: tuple


class UqAlgebra:
    """U_q(g) (or a lattice extension) for a root system and a normal ordering."""

    def __init__(
        self,
        rs: RootSystem,
        ordering: NormalOrdering,
        cartan: Sequence[CartanSymbol],
        K: Sequence[tuple],
        hopf_data: Sequence[SimpleHopfData],
        name: str,
        divided: Sequence[int] | None = None,
    ):
        self.rs = rs
        self.ordering = ordering
        self.K = [tuple(k) for k in K]  # cartan exponent vector of K_i
        self.hopf_data = list(hopf_data)
        self.divided = list(divided) if divided is not None else [1] * len(cartan)
        roots = ordering.roots
        M = len(roots)
        self.recipe: dict = {}
        self.ambiguous: list = []
        for g in sorted(roots, key=sum):
            if sum(g) > 1:
                a, b, amb = decomposition(rs, ordering, g)
                self.recipe[g] = (a, b)
                if amb:
                    self.ambiguous.append(g)
        letters = []
        for r in reversed(roots):
            letters.append(Letter(self.f_name(r), "lowering", tuple(-c for c in r)))
        for r in roots:
            letters.append(Letter(self.e_name(r), "raising", tuple(r)))
        self.M = M
        self.pres = Presentation(name, letters, cartan, rule_provider=self._provide)
        self.images = RootVectorImages(rs, ordering, self.recipe)
        self._root_of = {}
        for j, r in enumerate(reversed(roots)):
            self._root_of[j] = ("f", r)
        for j, r in enumerate(roots):
            self._root_of[M + j] = ("e", r)
        self.hopf = self._build_hopf()

    # names and elements ----------------------------------------------------
    def e_name(self, r) -> str:
        n = self.rs.root_name(tuple(r))
        return f"e{n}" if sum(r) == 1 else f"e_{n}"

    def f_name(self, r) -> str:
        n = self.rs.root_name(tuple(r))
        return f"f{n}" if sum(r) == 1 else f"f_{n}"

    def e(self, r) -> NCPoly:
        if isinstance(r, int):
            r = self.rs.simple(r - 1)
        return self.pres.gen(self.e_name(r))

    def f(self, r) -> NCPoly:
        if isinstance(r, int):
            r = self.rs.simple(r - 1)
        return self.pres.gen(self.f_name(r))

    def cartan_exp(self, r, power: int = 1) -> tuple:
        """Exponent vector of k_r = prod K_i^{c_i}."""
        n = self.pres.ncart
        v = [0] * n
        for i, c in enumerate(r):
            for s in range(n):
                v[s] += power * c * self.K[i][s]
        return tuple(v)

    def k(self, r, power: int = 1) -> NCPoly:
        if isinstance(r, int):
            r = self.rs.simple(r - 1)
        return self.pres.word_poly(((), self.cartan_exp(r, power), ()))

    def cartan(self, exps) -> NCPoly:
        return self.pres.word_poly(((), tuple(exps), ()))

    @property
    def highest_root(self) -> tuple:
        return self.rs.highest_root

    def e_index(self, r) -> int:
        return self.M + self.ordering.index(r)

    def f_index(self, r) -> int:
        return self.M - 1 - self.ordering.index(r)

    # rules ------------------------------------------------------------------
    def _e_word(self, idxs) -> tuple:
        return ((), self.pres.zero_cart, tuple(self.M + i for i in idxs))

    def _f_word(self, idxs) -> tuple:
        # reversed increasing-order monomial, as f-block indices
        return (tuple(self.M - 1 - i for i in reversed(idxs)), self.pres.zero_cart, ())

    def _provide(self, pres: Presentation, i: int, j: int):
        si, ri = self._root_of[i]
        sj, rj = self._root_of[j]
        if si == "e" and sj == "e":
            if i <= j:
                return None
            a, b = i - self.M, j - self.M
            rule = self.images.straighten(a, b)
            return {self._e_word(m): c for m, c in rule.items()}
        if si == "f" and sj == "f":
            if i <= j:
                return None
            a, b = self.ordering.index(ri), self.ordering.index(rj)  # a < b
            rule = self.images.straighten(b, a)
            return {self._f_word(m): c.substitute_power(-1) for m, c in rule.items()}
        if si == "e" and sj == "f":
            return self._ef_rule(ri, rj).terms
        return None

    def _ef_rule(self, g, d) -> NCPoly:
        """Normal form of e_g f_d."""
        p = self.pres
        if sum(g) > 1:
            a, b = self.recipe[g]
            c = qpow(-self.rs.form(a, b))
            ea, eb, fd = self.e(a), self.e(b), self.f(d)
            return ea * (eb * fd) - (eb * (ea * fd)).scale(c)
        if sum(d) > 1:
            a, b = self.recipe[d]
            c = qpow(self.rs.form(b, a))
            eg, fa, fb = self.e(g), self.f(a), self.f(b)
            return (eg * fb) * fa - ((eg * fa) * fb).scale(c)
        fw = (((self.f_index(d),), p.zero_cart, ()))
        ew = ((), p.zero_cart, (self.e_index(g),))
        out = NCPoly(p, {(fw[0], p.zero_cart, ew[2]): ONE})
        if g == d:
            i = g.index(1)
            kk = self.cartan(self.K[i])
            ki = self.cartan(tuple(-x for x in self.K[i]))
            out = out + (kk - ki).scale((Q - Q.inv()).inv())
        return out

    # Hopf structure -----------------------------------------------------------
    def _build_hopf(self) -> HopfPresentation:
        p = self.pres
        one = p.one()
        delta, anti, eps = {}, {}, {}
        for i, hd in enumerate(self.hopf_data):
            r = self.rs.simple(i)
            e, f = self.e(r), self.f(r)
            A, B, C, D = (self.cartan(x) for x in (hd.A, hd.B, hd.C, hd.D))
            Ai, Bi, Ci, Di = (self.cartan(tuple(-y for y in x)) for x in (hd.A, hd.B, hd.C, hd.D))
            delta[self.e_name(r)] = TensorPoly.tensor(A, e) + TensorPoly.tensor(e, B)
            delta[self.f_name(r)] = TensorPoly.tensor(f, C) + TensorPoly.tensor(D, f)
            anti[self.e_name(r)] = -(Ai * e * Bi)
            anti[self.f_name(r)] = -(Di * f * Ci)
        h = HopfPresentation(p, delta, eps, anti)
        for g, (a, b) in self.recipe.items():
            c = qpow(-self.rs.form(a, b))
            h._delta[self.e_name(g)] = self._lazy_delta(h, a, b, c, "e")
            h._delta[self.f_name(g)] = self._lazy_delta(h, a, b, c.inv(), "f")
            h._antipode[self.e_name(g)] = self._lazy_anti(h, a, b, c, "e")
            h._antipode[self.f_name(g)] = self._lazy_anti(h, a, b, c.inv(), "f")
        return h

    def _lazy_delta(self, h, a, b, c, side):
        def run():
            if side == "e":
                da, db = coproduct(self.e(a), h), coproduct(self.e(b), h)
                return da * db - (db * da).scale(c)
            da, db = coproduct(self.f(a), h), coproduct(self.f(b), h)
            return db * da - (da * db).scale(c)

        return run

    def _lazy_anti(self, h, a, b, c, side):
        from ..hopf import antipode

        def run():
            if side == "e":
                sa, sb = antipode(self.e(a), h), antipode(self.e(b), h)
                return sb * sa - (sa * sb).scale(c)
            sa, sb = antipode(self.f(a), h), antipode(self.f(b), h)
            return sa * sb - (sb * sa).scale(c)

        return run

    def __repr__(self):
        return f"UqAlgebra({self.pres.name})"


_CACHE: dict = {}


def quantum_group(typ: str, rank: int, ordering: NormalOrdering | str = "standard") -> UqAlgebra:
    """U_q(g) with Chevalley data Delta(e_i) = k_i^{-1} (x) e_i + e_i (x) 1, Delta(f_i) = f_i (x) k_i + 1 (x) f_i."""
    rs = build_root_system(typ, rank)
    if ordering == "standard":
        ordering = standard_normal_ordering(rs)
    key = ("Uq", rs.label, ordering.roots)
    if key in _CACHE:
        return _CACHE[key]
    n = rs.rank
    cartan = [CartanSymbol(f"k{i + 1}", tuple(rs.bilinear_form[i]), True) for i in range(n)]
    K = [tuple(1 if s == i else 0 for s in range(n)) for i in range(n)]
    zero = (0,) * n
    hd = [SimpleHopfData(tuple(-x for x in K[i]), zero, K[i], zero) for i in range(n)]
    suffix = "" if ordering.label == "standard" else f"[{ordering.label}]"
    alg = UqAlgebra(rs, ordering, cartan, K, hd, f"Uq({rs.label}){suffix}")
    _CACHE[key] = alg
    return alg


def uq_prime_sl3() -> UqAlgebra:
    """U'_q(sl3): lattice generators L1, L2 with K_j = prod_i L_i^{a_ij} and the twisted coproduct table."""
    key = ("Uq'", "A2")
    if key in _CACHE:
        return _CACHE[key]
    rs = build_root_system("A", 2)
    ordering = standard_normal_ordering(rs)
    cartan = [CartanSymbol("L1", (1, 0), True), CartanSymbol("L2", (0, 1), True)]
    A = rs.cartan_matrix
    K = [tuple(A[i][j] for i in range(2)) for j in range(2)]
    hd = [
        SimpleHopfData((-2, 2), (0, 0), (2, -1), (0, -1)),
        SimpleHopfData((1, -2), (1, 0), (-2, 2), (0, 0)),
    ]
    alg = UqAlgebra(rs, ordering, cartan, K, hd, "U'q(sl3)")
    _CACHE[key] = alg
    return alg


# ---------------------------------------------------------------------------
# composite generators and the highest-root q-commutation


def composite_generator(
    gamma, ordering: NormalOrdering, alg: UqAlgebra, sign: int = 1, literal_f: bool = False
) -> NCPoly:
    """e_gamma (sign=1) or f_gamma (sign=-1) built in ``alg`` from simple letters along ``ordering``.

    When ``ordering`` is the algebra's own ordering this is just the PBW letter.
    f_gamma uses the factor q^{(alpha,beta)}; ``literal_f`` switches to
    q^{-(alpha,beta)}, for which [e_gamma, f_gamma] is no longer a Cartan element.
    Ties between admissible decompositions raise an AmbiguousDecomposition
    warning and are broken by the smallest alpha.
    """
    gamma = tuple(gamma)
    if ordering.roots == alg.ordering.roots and not (literal_f and sign < 0):
        return alg.e(gamma) if sign > 0 else alg.f(gamma)
    cache = alg.__dict__.setdefault("_gen_cache", {})
    key = (ordering.roots, gamma, sign, literal_f)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if sum(gamma) == 1:
        out = alg.e(gamma) if sign > 0 else alg.f(gamma)
    else:
        a, b, amb = decomposition(alg.rs, ordering, gamma)
        if amb:
            warnings.warn(f"several admissible decompositions of {gamma}", AmbiguousDecomposition)
        xa = composite_generator(a, ordering, alg, sign, literal_f)
        xb = composite_generator(b, ordering, alg, sign, literal_f)
        if sign > 0:
            out = xa * xb - (xb * xa).scale(qpow(-alg.rs.form(a, b)))
        else:
            c = qpow(-alg.rs.form(a, b)) if literal_f else qpow(alg.rs.form(a, b))
            out = xb * xa - (xa * xb).scale(c)
    cache[key] = out
    return out


def a_gamma(alg: UqAlgebra, gamma) -> QRatFunc:
    """The scalar a with [e_gamma, f_gamma] = a (k_gamma - k_gamma^{-1})/(q - q^{-1}).

    Raises ValueError if the commutator is not of that shape.
    """
    gamma = tuple(gamma)
    br = alg.e(gamma) * alg.f(gamma) - alg.f(gamma) * alg.e(gamma)
    unit = (alg.k(gamma) - alg.k(gamma, -1)).scale((Q - Q.inv()).inv())
    w = next(iter(unit.terms))
    a = br.coeff(w) * unit.terms[w].inv()
    if br != unit.scale(a):
        raise ValueError(f"[e, f] for {gamma} is not proportional to (k - k^-1)/(q - q^-1)")
    return a


@dataclass
class QCommutationReport:
    algebra: str
    ordering: tuple
    highest_root: tuple
    brackets: dict = field(default_factory=dict)  # gamma -> residual NCPoly
    ext_violations: dict = field(default_factory=dict)  # gamma -> offending letters
    tensor_residual: TensorPoly | None = None

    @property
    def bracket_failures(self) -> list:
        return [g for g, r in self.brackets.items() if r]

    @property
    def tensor_ok(self) -> bool:
        return self.tensor_residual is not None and not self.tensor_residual

    @property
    def passed(self) -> bool:
        return not self.bracket_failures and self.tensor_ok and not self.ext_violations

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "ordering": [list(r) for r in self.ordering],
            "highest_root": list(self.highest_root),
            "brackets": {"".join(map(str, g)): r.serialize() for g, r in self.brackets.items()},
            "ext_violations": {"".join(map(str, g)): v for g, v in self.ext_violations.items()},
            "tensor_residual": self.tensor_residual.serialize() if self.tensor_residual is not None else None,
            "passed": self.passed,
        }


def _letters_used(x: NCPoly) -> set:
    out = set()
    for low, _, high in x.terms:
        out.update(low)
        out.update(high)
    return out


def tensor_residual(alg: UqAlgebra, ordering: NormalOrdering | None = None) -> TensorPoly:
    """(e_l (x) 1) X - q_l X (e_l (x) 1) with X = Delta(e_l) - e_l (x) 1, l the highest root."""
    ordering = ordering or alg.ordering
    lam = alg.highest_root
    e = composite_generator(lam, ordering, alg)
    L = TensorPoly.tensor(e, alg.pres.one())
    X = coproduct(e, alg.hopf) - L
    return L * X - (X * L).scale(qpow(alg.rs.form(lam, lam)))


def q_commutation_check(
    ordering: NormalOrdering | None, alg: UqAlgebra, generators: NormalOrdering | None = None
) -> QCommutationReport:
    """[e_gamma, e_lambda]_{q^-(gamma, lambda)} for gamma before lambda, plus the tensor identity.

    "Before" refers to ``ordering`` (default: the algebra's own).  Generators
    are built along ``generators``, which defaults to ``ordering``; passing
    the algebra's ordering together with a different ``ordering`` tests the
    fixed generators against another ordering.
    """
    ordering = ordering or alg.ordering
    gens = generators or ordering
    rs = alg.rs
    lam = rs.highest_root
    rep = QCommutationReport(alg.pres.name, ordering.roots, lam)
    el = composite_generator(lam, gens, alg)
    own = ordering.roots == alg.ordering.roots == gens.roots
    for g in ordering.roots:
        if g == lam:
            break
        eg = composite_generator(g, gens, alg)
        r = q_commutator(eg, el, qpow(-rs.form(g, lam)))
        rep.brackets[g] = r
        if r and own:
            allowed = {alg.e_index(m) for m in ordering.roots if ordering.precedes(g, m) and ordering.precedes(m, lam)}
            bad = sorted(alg.pres.letters[i].name for i in _letters_used(r) - allowed)
            if bad:
                rep.ext_violations[g] = bad
    rep.tensor_residual = tensor_residual(alg, gens)
    return rep


def ls_violations(alg: UqAlgebra) -> list:
    """Pairs alpha < beta whose q-commutator leaves the open interval (alpha, beta).

    [e_a, e_b]_{q^-(a,b)} must be a combination of PBW monomials in e_m with
    a < m < b; an empty list confirms that for every pair.
    """
    rs, roots = alg.rs, alg.ordering.roots
    out = []
    for i, a in enumerate(roots):
        for j in range(i + 1, len(roots)):
            b = roots[j]
            r = q_commutator(alg.e(a), alg.e(b), qpow(-rs.form(a, b)))
            allowed = {alg.e_index(m) for m in roots[i + 1 : j]}
            if _letters_used(r) - allowed:
                out.append((a, b))
    return out
