"""Quantum shuffle realization of U_q^+ and derivation of PBW straightening rules.

U_q^+ embeds in the quantum shuffle algebra by e_i -> (i) for generic q, so a
relation among PBW monomials can be found by exact linear algebra on the
images.  Coefficients are integer Laurent polynomials, kept as {exp: int}.
"""

from __future__ import annotations

from functools import lru_cache

from ..coeff import ONE, ZERO, QRatFunc, qpow
from .roots import NormalOrdering, RootSystem


def _lp_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        n = out.get(k, 0) + sign * v
        if n:
            out[k] = n
        else:
            out.pop(k, None)
    return out


def _lp_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = k1 + k2
            n = out.get(k, 0) + v1 * v2
            if n:
                out[k] = n
            else:
                out.pop(k, None)
    return out


def _lp_to_q(a: dict) -> QRatFunc:
    tot = ZERO
    for k, v in a.items():
        tot = tot + qpow(k) * v
    return tot


class ShuffleAlgebra:
    """Quantum shuffle algebra over the simple roots of ``rs``."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.B = rs.bilinear_form
        self._prod = lru_cache(maxsize=None)(self._word_product)

    def _pair_wt(self, word, letter) -> int:
        return sum(self.B[i][letter] for i in word)

    def _word_product(self, u: tuple, v: tuple) -> dict:
        if not u:
            return {v: {0: 1}}
        if not v:
            return {u: {0: 1}}
        a, b = u[-1], v[-1]
        out: dict = {}
        for w, c in self._word_product(u, v[:-1]).items():
            out[w + (b,)] = _lp_add(out.get(w + (b,), {}), c)
        shift = -self._pair_wt(v, a)
        for w, c in self._word_product(u[:-1], v).items():
            cc = {k + shift: x for k, x in c.items()}
            out[w + (a,)] = _lp_add(out.get(w + (a,), {}), cc)
        return {w: c for w, c in out.items() if c}

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for u, cu in x.items():
            for v, cv in y.items():
                c = _lp_mul(cu, cv)
                for w, cw in self._prod(u, v).items():
                    n = _lp_add(out.get(w, {}), _lp_mul(c, cw))
                    if n:
                        out[w] = n
                    else:
                        out.pop(w, None)
        return out

    def sub(self, x: dict, y: dict, coef_exp: int = 0, coef: int = 1) -> dict:
        """x - coef*q^coef_exp*y."""
        out = dict(x)
        for w, c in y.items():
            cc = {k + coef_exp: coef * v for k, v in c.items()}
            n = _lp_add(out.get(w, {}), cc, -1)
            if n:
                out[w] = n
            else:
                out.pop(w, None)
        return out

    @staticmethod
    def letter(i: int) -> dict:
        return {(i,): {0: 1}}


def kostant_partitions(roots, target, allowed=None):
    """Multisets of roots (as nondecreasing index tuples into ``roots``) summing to target."""
    idx = list(range(len(roots))) if allowed is None else list(allowed)
    out = []

    def rec(start, rest, acc):
        if not any(rest):
            out.append(tuple(acc))
            return
        for j in range(start, len(idx)):
            r = roots[idx[j]]
            if all(a <= b for a, b in zip(r, rest)):
                acc.append(idx[j])
                rec(j, tuple(b - a for a, b in zip(r, rest)), acc)
                acc.pop()

    rec(0, tuple(target), [])
    return out


def solve_in_span(vectors: list, target: dict):
    """Express ``target`` as a Q(q)-combination of ``vectors`` (dicts word -> QRatFunc).

    Returns the list of coefficients, or None if target is outside the span.
    Raises ValueError if the vectors are dependent.
    """
    rows: list = []  # (pivot, vec, combo)
    for m, v in enumerate(vectors):
        vec = dict(v)
        combo = {m: ONE}
        for piv, rv, rc in rows:
            c = vec.get(piv)
            if c:
                for w, x in rv.items():
                    n = vec.get(w, ZERO) - c * x
                    if n:
                        vec[w] = n
                    else:
                        vec.pop(w, None)
                for k, x in rc.items():
                    n = combo.get(k, ZERO) - c * x
                    if n:
                        combo[k] = n
                    else:
                        combo.pop(k, None)
        if not vec:
            raise ValueError("PBW images are linearly dependent")
        piv = max(vec)
        inv = vec[piv].inv()
        vec = {w: x * inv for w, x in vec.items()}
        combo = {k: x * inv for k, x in combo.items()}
        # keep rows fully reduced w.r.t. the new pivot
        new_rows = []
        for p2, rv, rc in rows:
            c = rv.get(piv)
            if c:
                rv = dict(rv)
                rc = dict(rc)
                for w, x in vec.items():
                    n = rv.get(w, ZERO) - c * x
                    if n:
                        rv[w] = n
                    else:
                        rv.pop(w, None)
                for k, x in combo.items():
                    n = rc.get(k, ZERO) - c * x
                    if n:
                        rc[k] = n
                    else:
                        rc.pop(k, None)
            new_rows.append((p2, rv, rc))
        rows = new_rows + [(piv, vec, combo)]
    vec = dict(target)
    sol = [ZERO] * len(vectors)
    for piv, rv, rc in rows:
        c = vec.get(piv)
        if c:
            for w, x in rv.items():
                n = vec.get(w, ZERO) - c * x
                if n:
                    vec[w] = n
                else:
                    vec.pop(w, None)
            for k, x in rc.items():
                sol[k] = sol[k] + c * x
    if vec:
        return None
    return sol


class RootVectorImages:
    """Shuffle images of the root vectors e_gamma for a normal ordering and recipe."""

    def __init__(self, rs: RootSystem, ordering: NormalOrdering, recipe: dict):
        self.rs = rs
        self.ordering = ordering
        self.recipe = recipe  # gamma -> (alpha, beta)
        self.sh = ShuffleAlgebra(rs)
        self._img: dict = {}
        self._mono: dict = {}

    def image(self, gamma) -> dict:
        gamma = tuple(gamma)
        hit = self._img.get(gamma)
        if hit is not None:
            return hit
        if sum(gamma) == 1:
            out = self.sh.letter(gamma.index(1))
        else:
            a, b = self.recipe[gamma]
            ea, eb = self.image(a), self.image(b)
            out = self.sh.sub(self.sh.mul(ea, eb), self.sh.mul(eb, ea), -self.rs.form(a, b))
        self._img[gamma] = out
        return out

    def monomial(self, idxs: tuple) -> dict:
        """Image of e_{r[i1]} e_{r[i2]} ... (indices into the ordering)."""
        hit = self._mono.get(idxs)
        if hit is not None:
            return hit
        if not idxs:
            out = {(): {0: 1}}
        elif len(idxs) == 1:
            out = self.image(self.ordering.roots[idxs[0]])
        else:
            out = self.sh.mul(self.monomial(idxs[:-1]), self.image(self.ordering.roots[idxs[-1]]))
        self._mono[idxs] = out
        return out

    def straighten(self, i: int, j: int) -> dict:
        """e_{r[i]} e_{r[j]} for i > j as {ordered index tuple: QRatFunc}."""
        roots = self.ordering.roots
        target_w = tuple(a + b for a, b in zip(roots[i], roots[j]))
        cands = kostant_partitions(roots, target_w, allowed=range(j, i + 1))
        vecs = []
        for m in cands:
            img = self.monomial(m)
            vecs.append({w: _lp_to_q(c) for w, c in img.items()})
        tgt = {w: _lp_to_q(c) for w, c in self.sh.mul(self.image(roots[i]), self.image(roots[j])).items()}
        sol = solve_in_span(vecs, tgt)
        if sol is None:
            # fall back to every Kostant partition of the weight
            cands = kostant_partitions(roots, target_w)
            vecs = [{w: _lp_to_q(c) for w, c in self.monomial(m).items()} for m in cands]
            sol = solve_in_span(vecs, tgt)
            if sol is None:
                raise ArithmeticError("product is outside the PBW span")
        return {m: c for m, c in zip(cands, sol) if c}
