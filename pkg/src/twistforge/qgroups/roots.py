"""Root systems of types A-D, normal orderings and composite-root recipes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property


class UnsupportedType(ValueError):
    pass


class AmbiguousDecomposition(UserWarning):
    pass


def _eps_simple_roots(typ: str, n: int):
    """Simple roots in the epsilon basis, and the epsilon-space dimension."""
    def e(i, dim):
        v = [0] * dim
        v[i] = 1
        return v

    if typ == "A":
        dim = n + 1
        return [[a - b for a, b in zip(e(i, dim), e(i + 1, dim))] for i in range(n)], dim
    dim = n
    roots = [[a - b for a, b in zip(e(i, dim), e(i + 1, dim))] for i in range(n - 1)]
    if typ == "B":
        roots.append(e(n - 1, dim))
    elif typ == "C":
        roots.append([2 * a for a in e(n - 1, dim)])
    else:  # D
        roots.append([a + b for a, b in zip(e(n - 2, dim), e(n - 1, dim))])
    return roots, dim


def _eps_positive_roots(typ: str, n: int):
    out = []
    dim = n + 1 if typ == "A" else n
    for i in range(dim):
        for j in range(i + 1, dim):
            v = [0] * dim
            v[i], v[j] = 1, -1
            out.append(v)
            if typ != "A":
                w = [0] * dim
                w[i], w[j] = 1, 1
                out.append(w)
    if typ in ("B", "C"):
        for i in range(dim):
            v = [0] * dim
            v[i] = 1 if typ == "B" else 2
            out.append(v)
    return out


@dataclass(frozen=True)
class RootSystem:
    """Positive roots are integer tuples of simple-root coefficients."""

    type: str
    rank: int
    cartan_matrix: tuple
    bilinear_form: tuple  # Gram matrix of the simple roots
    positive_roots: tuple
    highest_root: tuple

    def form(self, a, b) -> int:
        B = self.bilinear_form
        return sum(a[i] * B[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def is_root(self, v) -> bool:
        return tuple(v) in self._root_set

    @cached_property
    def _root_set(self):
        return frozenset(self.positive_roots)

    def simple(self, i: int) -> tuple:
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def height(self, r) -> int:
        return sum(r)

    @property
    def label(self) -> str:
        return f"{self.type}{self.rank}"

    def root_name(self, r) -> str:
        """'3' for a simple root, else the coefficient string, e.g. '121'."""
        if sum(r) == 1:
            return str(r.index(1) + 1)
        return "".join(str(c) for c in r)

    def reflect(self, i: int, v) -> tuple:
        a = self.simple(i)
        c = Fraction(2 * self.form(v, a), self.form(a, a))
        assert c.denominator == 1
        return tuple(x - int(c) * y for x, y in zip(v, a))


def build_root_system(typ: str, rank: int) -> RootSystem:
    typ = typ.upper()
    ok = {"A": 1, "B": 2, "C": 2, "D": 4}
    if typ not in ok:
        raise UnsupportedType(f"type {typ} is not supported (only A, B, C, D)")
    if rank < ok[typ]:
        raise UnsupportedType(f"{typ}{rank}: rank must be at least {ok[typ]}")
    simple, dim = _eps_simple_roots(typ, rank)
    scale = 2 if typ == "B" else 1  # keep every (a, b) an integer
    gram = tuple(
        tuple(scale * sum(x * y for x, y in zip(a, b)) for b in simple) for a in simple
    )
    cartan = tuple(
        tuple(2 * gram[i][j] // gram[i][i] for j in range(rank)) for i in range(rank)
    )
    pos = []
    for v in _eps_positive_roots(typ, rank):
        pos.append(_coords(v, simple, dim))
    pos.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
    highest = max(pos, key=sum)
    return RootSystem(typ, rank, cartan, gram, tuple(pos), highest)


def _coords(v, simple, dim):
    return _solve(v, simple)


def _solve(v, simple):
    from flint import fmpq_mat

    n = len(simple)
    dim = len(v)
    A = fmpq_mat(dim, n, [simple[j][i] for i in range(dim) for j in range(n)])
    b = fmpq_mat(dim, 1, list(v))
    At = A.transpose()
    x = (At * A).solve(At * b)
    out = []
    for i in range(n):
        f = Fraction(int(x[i, 0].p), int(x[i, 0].q))
        assert f.denominator == 1
        out.append(int(f))
    return tuple(out)


# ---------------------------------------------------------------------------
# orderings


@dataclass(frozen=True)
class NormalOrdering:
    """Positive roots listed from the smallest to the largest."""

    roots: tuple
    label: str = "standard"

    def index(self, r) -> int:
        return self.roots.index(tuple(r))

    def precedes(self, a, b) -> bool:
        return self.index(a) < self.index(b)

    def reversed(self) -> "NormalOrdering":
        return NormalOrdering(tuple(reversed(self.roots)), self.label + "-reversed")


def is_normal(rs: RootSystem, order) -> bool:
    roots = order.roots if isinstance(order, NormalOrdering) else tuple(order)
    if sorted(roots) != sorted(rs.positive_roots):
        return False
    pos = {r: i for i, r in enumerate(roots)}
    for a in roots:
        for b in roots:
            if pos[a] < pos[b]:
                s = tuple(x + y for x, y in zip(a, b))
                if s in pos and not (pos[a] < pos[s] < pos[b]):
                    return False
    return True


def ordering_from_reduced_word(rs: RootSystem, word) -> tuple:
    """beta_k = s_{i1} ... s_{i(k-1)} alpha_{ik}."""
    out = []
    for k, i in enumerate(word):
        v = rs.simple(i)
        for j in reversed(word[:k]):
            v = rs.reflect(j, v)
        out.append(v)
    return tuple(out)


def search_normal_orderings(rs: RootSystem, accept_prefix):
    """Depth-first search over reduced words of w0; yields root orderings.

    ``accept_prefix(roots_so_far)`` prunes the search.
    """
    M = len(rs.positive_roots)

    def rec(word, roots, seen):
        if len(roots) == M:
            yield tuple(roots)
            return
        for i in range(rs.rank):
            v = rs.simple(i)
            for j in reversed(word):
                v = rs.reflect(j, v)
            if min(v) < 0 or v in seen:
                continue
            roots.append(v)
            if accept_prefix(roots):
                seen.add(v)
                word.append(i)
                yield from rec(word, roots, seen)
                word.pop()
                seen.discard(v)
            roots.pop()

    yield from rec([], [], set())


def _a_type_order(roots, rank):
    # lexicographic: by first simple root in the support, then by height
    def key(r):
        first = next(i for i, c in enumerate(r) if c)
        return (first, sum(r))

    return tuple(sorted(roots, key=key))


SUPPORTED = {"A": (1, 2, 3), "B": (2,), "C": (2,), "D": (4,)}


def standard_normal_ordering(rs: RootSystem) -> NormalOrdering:
    """The orderings used for the highest-root q-commutation property.

    A and C: roots containing alpha_1 come first, ending at the highest root,
    then the roots without alpha_1 (for A this is the order under which
    e_{1+2} = e_1 e_2 - q e_2 e_1).  B and D: the stated chain
    alpha_1, alpha_1+alpha_2, ..., lambda, (roots without alpha_1) is read as
    a decreasing sequence, so the list runs from the last simple root up to
    alpha_1.  Read the other way round, B and D violate the q-commutation.
    """
    typ, n = rs.type, rs.rank
    if typ == "A":
        order = _a_type_order(list(rs.positive_roots), n)
    elif typ == "B" and n == 2:
        order = ((0, 1), (1, 2), (1, 1), (1, 0))
    elif typ == "C" and n == 2:
        order = ((1, 0), (2, 1), (1, 1), (0, 1))
    elif typ == "D" and n == 4:
        order = tuple(reversed(_pattern_search(rs)))
    else:
        raise UnsupportedType(f"no fixed normal ordering for {rs.label}")
    ordering = NormalOrdering(tuple(order), "standard")
    assert is_normal(rs, ordering), "internal ordering is not normal"
    return ordering


def _pattern_search(rs: RootSystem):
    """First normal ordering with the alpha_1 block (ending at lambda) in front.

    Within the alpha_1 block the listed chain alpha_1, alpha_1+alpha_2, ... keeps
    its order; the tail starts with alpha_2 and ends with the last simple root.
    """
    n, lam = rs.rank, rs.highest_root
    with1 = [r for r in rs.positive_roots if r[0] > 0]
    chain = []
    for k in range(1, n):
        chain.append(tuple([1] * k + [0] * (n - k)))
    if rs.type == "D":
        chain.append(tuple([1] * n))
    chain = [r for r in chain if rs.is_root(r)] + [lam]
    nfirst = len(with1)
    last_simple = rs.simple(n - 1)

    def accept(roots):
        k = len(roots)
        r = roots[-1]
        if k <= nfirst:
            if r[0] == 0:
                return False
            if k == nfirst and r != lam:
                return False
            listed = [x for x in roots if x in chain]
            if listed != chain[: len(listed)]:
                return False
            return True
        if k == nfirst + 1 and r != rs.simple(1):
            return False
        if k == len(rs.positive_roots) and r != last_simple:
            return False
        return True

    for order in search_normal_orderings(rs, accept):
        return order
    raise RuntimeError("no normal ordering with the required pattern")


def minimal_pairs(rs: RootSystem, ordering: NormalOrdering, gamma) -> list:
    """Pairs (alpha, beta), alpha < gamma < beta, gamma = alpha + beta, with no root strictly inside."""
    gamma = tuple(gamma)
    idx = {r: i for i, r in enumerate(ordering.roots)}
    pairs = []
    for a in ordering.roots:
        b = tuple(x - y for x, y in zip(gamma, a))
        if b in idx and idx[a] < idx[b]:
            pairs.append((a, b))
    out = []
    for a, b in pairs:
        inner = any(idx[a] < idx[a2] and idx[b2] < idx[b] for a2, b2 in pairs if (a2, b2) != (a, b))
        if not inner:
            out.append((a, b))
    return out


def decomposition(rs: RootSystem, ordering: NormalOrdering, gamma):
    """The (alpha, beta) used to build e_gamma; ties resolved by the smallest alpha.

    Returns ``(alpha, beta, ambiguous)``.
    """
    pairs = minimal_pairs(rs, ordering, gamma)
    if not pairs:
        raise ValueError(f"{gamma} is simple or not a root")
    idx = {r: i for i, r in enumerate(ordering.roots)}
    pairs.sort(key=lambda ab: idx[ab[0]])
    a, b = pairs[0]
    return a, b, len(pairs) > 1
