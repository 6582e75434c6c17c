"""Classical enveloping algebras U(g) from matrix realizations.

The Lie algebra is realized by explicit matrices (sl_n, and so/sp with an
antidiagonal form), root vectors are built with the same recipes as the
quantum Cartan-Weyl letters at q = 1, and structure constants come from an
exact linear solve.  Nothing here looks at the quantum rules, so comparing
the two is a genuine check of the specialization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from flint import fmpq, fmpq_mat

from ..coeff import ONE, QRatFunc
from ..hopf import HopfPresentation, TensorPoly
from ..ncalg import CartanSymbol, Letter, NCPoly, Presentation
from .roots import NormalOrdering, RootSystem, build_root_system, decomposition, standard_normal_ordering


def _unit(d: int, i: int, j: int) -> fmpq_mat:
    m = fmpq_mat(d, d)
    m[i, j] = 1
    return m


def _br(a: fmpq_mat, b: fmpq_mat) -> fmpq_mat:
    return a * b - b * a


def _antidiag(d: int, signs=None) -> fmpq_mat:
    J = fmpq_mat(d, d)
    for i in range(d):
        J[i, d - 1 - i] = 1 if signs is None else signs[i]
    return J


def simple_matrices(rs: RootSystem):
    """(E_1..E_n, ambient dimension, invariant form or None) for the standard realization."""
    n, typ = rs.rank, rs.type
    E = []
    if typ == "A":
        d = n + 1
        return [_unit(d, i, i + 1) for i in range(n)], d, None
    d = 2 * n + 1 if typ == "B" else 2 * n
    for i in range(n - 1):
        E.append(_unit(d, i, i + 1) - _unit(d, d - 2 - i, d - 1 - i))
    if typ == "B":
        E.append(_unit(d, n - 1, n) - _unit(d, n, n + 1))
        J = _antidiag(d)
    elif typ == "C":
        E.append(_unit(d, n - 1, n))
        J = _antidiag(d, [1] * n + [-1] * n)
    else:
        E.append(_unit(d, n - 2, n) - _unit(d, n - 1, n + 1))
        J = _antidiag(d)
    return E, d, J


def _scalar_multiple(a: fmpq_mat, b: fmpq_mat):
    """c with a = c*b, or None."""
    c = None
    for i in range(b.nrows()):
        for j in range(b.ncols()):
            if b[i, j] != 0:
                c = a[i, j] / b[i, j]
                break
        if c is not None:
            break
    if c is None:
        return None
    return c if a == b * c else None


def _frac(x: fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


class ClassicalAlgebra:
    """U(g) with PBW letters F_gamma, E_gamma and primitive Cartan symbols.

    ``cartan`` is a list of (name, coweight, diagonal matrix); the coweight
    pairs with root coordinates, so [H, E_gamma] = (coweight . gamma) E_gamma.
    By default H_i is attached to alpha_i with [H_i, E_gamma] = (alpha_i, gamma) E_gamma,
    i.e. the image of (k_i - 1)/(q - 1).
    """

    def __init__(self, rs: RootSystem, ordering: NormalOrdering, cartan=None, name: str | None = None):
        self.rs = rs
        self.ordering = ordering
        E, d, J = simple_matrices(rs)
        self.dim = d
        self.form_matrix = J
        n = rs.rank
        F, H = [], []
        for i in range(n):
            Et = E[i].transpose()
            a = _scalar_multiple(_br(_br(E[i], Et), E[i]), E[i])
            scale = fmpq(rs.bilinear_form[i][i]) / a
            F.append(Et * scale)
            H.append(_br(E[i], F[i]))
        if J is not None:
            for X in E + F:
                if X.transpose() * J + J * X != fmpq_mat(d, d):
                    raise AssertionError("matrix outside the Lie algebra")
        for i in range(n):
            for j in range(n):
                if _br(H[i], E[j]) != E[j] * rs.bilinear_form[i][j]:
                    raise AssertionError(f"Cartan data mismatch for {rs.label} at ({i}, {j})")
        self._E = {rs.simple(i): E[i] for i in range(n)}
        self._F = {rs.simple(i): F[i] for i in range(n)}
        self.recipe = {}
        for g in sorted(ordering.roots, key=sum):
            if sum(g) > 1:
                a, b, _ = decomposition(rs, ordering, g)
                self.recipe[g] = (a, b)
                self._E[g] = _br(self._E[a], self._E[b])
                self._F[g] = _br(self._F[b], self._F[a])
        if cartan is None:
            cartan = [(f"H{i + 1}", tuple(rs.bilinear_form[i]), H[i]) for i in range(n)]
        self.cartan_data = list(cartan)
        for cname, cw, M in self.cartan_data:
            for g in ordering.roots:
                p = sum(Fraction(c) * x for c, x in zip(cw, g))
                if _br(M, self._E[g]) != self._E[g] * fmpq(p.numerator, p.denominator):
                    raise AssertionError(f"{cname} does not act diagonally with the stated weights")
        letters = []
        for r in reversed(ordering.roots):
            letters.append(Letter(self.f_name(r), "lowering", tuple(-c for c in r)))
        for r in ordering.roots:
            letters.append(Letter(self.e_name(r), "raising", tuple(r)))
        syms = [CartanSymbol(c[0], tuple(c[1]), False) for c in self.cartan_data]
        self.M = len(ordering.roots)
        self.pres = Presentation(name or f"U({rs.label})", letters, syms, rule_provider=self._provide)
        self._basis = []  # (kind, index) parallel to matrices
        mats = []
        for i, x in enumerate(letters):
            mats.append(self.letter_matrix(i))
            self._basis.append(("letter", i))
        for s, c in enumerate(self.cartan_data):
            mats.append(c[2])
            self._basis.append(("cartan", s))
        A = fmpq_mat(d * d, len(mats), [m[i // d, i % d] for i in range(d * d) for m in mats])
        At = A.transpose()
        self._A = A
        self._proj = (At * A).inv() * At
        delta = {x.name: None for x in letters}
        for i, x in enumerate(letters):
            w = self.pres._letter_word(i)
            delta[x.name] = TensorPoly(
                (self.pres, self.pres), {(w, self.pres.one_word): ONE, (self.pres.one_word, w): ONE}
            )
        anti = {x.name: -self.pres.word_poly(self.pres._letter_word(i)) for i, x in enumerate(letters)}
        self.hopf = HopfPresentation(self.pres, delta, {}, anti)

    # names and elements ----------------------------------------------------
    def _matrix_unit_name(self, r, lowering: bool) -> str | None:
        if self.rs.type != "A":
            return None
        first = next(i for i, c in enumerate(r) if c)
        a, b = first + 1, first + sum(r) + 1
        return f"E{b}{a}" if lowering else f"E{a}{b}"

    def e_name(self, r) -> str:
        m = self._matrix_unit_name(r, False)
        if m:
            return m
        n = self.rs.root_name(tuple(r))
        return f"E{n}" if sum(r) == 1 else f"E_{n}"

    def f_name(self, r) -> str:
        m = self._matrix_unit_name(r, True)
        if m:
            return m
        n = self.rs.root_name(tuple(r))
        return f"F{n}" if sum(r) == 1 else f"F_{n}"

    def e(self, r) -> NCPoly:
        if isinstance(r, int):
            r = self.rs.simple(r - 1)
        return self.pres.gen(self.e_name(tuple(r)))

    def f(self, r) -> NCPoly:
        if isinstance(r, int):
            r = self.rs.simple(r - 1)
        return self.pres.gen(self.f_name(tuple(r)))

    def h(self, name_or_index) -> NCPoly:
        if isinstance(name_or_index, int):
            name_or_index = self.cartan_data[name_or_index - 1][0]
        return self.pres.gen(name_or_index)

    def letter_matrix(self, i: int) -> fmpq_mat:
        M = self.M
        if i < M:
            return self._F[self.ordering.roots[M - 1 - i]]
        return self._E[self.ordering.roots[i - M]]

    def matrix(self, x: NCPoly) -> fmpq_mat:
        """Matrix of a degree-one element (a combination of letters and Cartan symbols)."""
        d = self.dim
        out = fmpq_mat(d, d)
        for (low, cart, high), c in x.terms.items():
            v = _frac_to_fmpq(c)
            if len(low) + len(high) + sum(cart) != 1:
                raise ValueError("only degree-one elements have a matrix")
            if low or high:
                out += self.letter_matrix((low + high)[0]) * v
            else:
                out += self.cartan_data[cart.index(1)][2] * v
        return out

    def from_matrix(self, m: fmpq_mat) -> NCPoly:
        d = self.dim
        vec = fmpq_mat(d * d, 1, [m[i // d, i % d] for i in range(d * d)])
        x = self._proj * vec
        if self._A * x != vec:
            raise ValueError("matrix is outside the span of the basis")
        out = {}
        p = self.pres
        for k, (kind, idx) in enumerate(self._basis):
            c = x[k, 0]
            if c == 0:
                continue
            if kind == "letter":
                w = p._letter_word(idx)
            else:
                h = [0] * p.ncart
                h[idx] = 1
                w = ((), tuple(h), ())
            out[w] = QRatFunc(_frac(c))
        return NCPoly(p, out)

    def bracket(self, x: NCPoly, y: NCPoly) -> NCPoly:
        return self.from_matrix(_br(self.matrix(x), self.matrix(y)))

    # rules ----------------------------------------------------------------
    def _provide(self, pres: Presentation, i: int, j: int):
        low_i, low_j = pres.is_lowering(i), pres.is_lowering(j)
        if low_i and not low_j:
            return None
        if low_i == low_j and i <= j:
            return None
        if low_i:
            swapped = ((j, i), pres.zero_cart, ())
        elif low_j:
            swapped = ((j,), pres.zero_cart, (i,))
        else:
            swapped = ((), pres.zero_cart, (j, i))
        br = self.from_matrix(_br(self.letter_matrix(i), self.letter_matrix(j)))
        out = dict(br.terms)
        out[swapped] = out.get(swapped, QRatFunc(0)) + ONE
        return out

    def __repr__(self):
        return f"ClassicalAlgebra({self.pres.name})"


def _frac_to_fmpq(c) -> fmpq:
    c = c if isinstance(c, QRatFunc) else QRatFunc(c)
    f = c.value_at_one()
    if not c.is_polynomial() or c.num.degree() > 0:
        raise ValueError("classical coefficients must be rational numbers")
    return fmpq(f.numerator, f.denominator)


_CACHE: dict = {}


def classical_algebra(typ: str, rank: int, ordering: NormalOrdering | str = "standard") -> ClassicalAlgebra:
    """U(g) matching ``quantum_group(typ, rank, ordering)`` letter by letter."""
    rs = build_root_system(typ, rank)
    if ordering == "standard":
        ordering = standard_normal_ordering(rs)
    key = ("U", rs.label, ordering.roots)
    if key not in _CACHE:
        suffix = "" if ordering.label == "standard" else f"[{ordering.label}]"
        _CACHE[key] = ClassicalAlgebra(rs, ordering, name=f"U({rs.label}){suffix}")
    return _CACHE[key]


def classical_sl3_weights() -> ClassicalAlgebra:
    """U(sl3) with the fundamental coweights h_w1, h_w2 as Cartan generators (target of U'_q(sl3))."""
    key = ("U", "A2", "weights")
    if key not in _CACHE:
        rs = build_root_system("A", 2)
        third = fmpq(1, 3)
        h1 = fmpq_mat(3, 3)
        h2 = fmpq_mat(3, 3)
        for i, v in enumerate((2, -1, -1)):
            h1[i, i] = v * third
        for i, v in enumerate((1, 1, -2)):
            h2[i, i] = v * third
        cartan = [("hw1", (1, 0), h1), ("hw2", (0, 1), h2)]
        _CACHE[key] = ClassicalAlgebra(rs, standard_normal_ordering(rs), cartan, name="U(sl3)[weights]")
    return _CACHE[key]
