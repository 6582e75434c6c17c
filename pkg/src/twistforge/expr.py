"""A small expression language for spot computations in a presented algebra.

    sum     := ['-'] tensor (('+' | '-') tensor)*
    tensor  := product ('ox' product)*
    product := power (('*' | '/') power)*
    power   := atom ['^' ['-'] INT]
    atom    := INT | NAME | NAME '(' sum (';' sum)* ')' | '(' sum ')'

``q`` and ``t`` are the scalar symbols, other names are generators of the
active presentation.  Functions: qexp(base; prefactor; arg), coproduct(x),
antipode(x), specialize(x).  Positions in errors are 1-based columns.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .coeff import ONE, ZERO, QConvention, QRatFunc, q_factorial, qpow
from .hopf import TensorPoly, TSeries, antipode, coproduct

FUNCTIONS = {"qexp": 3, "coproduct": 1, "antipode": 1, "specialize": 1}
SCALAR_NAMES = ("q", "t")


class ExprSyntaxError(SyntaxError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGenerator(KeyError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown generator {name!r} at position {position}")
        self.name = name
        self.position = position

    def __str__(self):
        return self.args[0]


class EvalError(ValueError):
    pass


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / ox
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


Node = Union[Num, Sym, Neg, BinOp, Pow, Call]

_PREC = {"+": 1, "-": 1, "ox": 2, "*": 3, "/": 3}


def _prec(n: Node) -> int:
    if isinstance(n, BinOp):
        return _PREC[n.op]
    if isinstance(n, Neg):
        return 1
    if isinstance(n, Pow):
        return 4
    return 5


def to_source(n: Node) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""
    if isinstance(n, Num):
        return str(n.value)
    if isinstance(n, Sym):
        return n.name
    if isinstance(n, Call):
        return f"{n.name}(" + "; ".join(to_source(a) for a in n.args) + ")"
    if isinstance(n, Pow):
        b = to_source(n.base)
        if _prec(n.base) < 5:
            b = f"({b})"
        return f"{b}^{n.exp}"
    if isinstance(n, Neg):
        a = to_source(n.arg)
        return "-" + (f"({a})" if _prec(n.arg) < 2 else a)
    p = _PREC[n.op]
    left, right = to_source(n.left), to_source(n.right)
    if _prec(n.left) < p:
        left = f"({left})"
    if _prec(n.right) <= p:
        right = f"({right})"
    sep = " ox " if n.op == "ox" else (f" {n.op} " if p == 1 else n.op)
    return left + sep + right


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_']*)|(.))")


def _tokenize(src: str):
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex) + 1
        if m.group(1):
            out.append(("num", m.group(1), start))
        elif m.group(2):
            kind = "ox" if m.group(2) == "ox" else "name"
            out.append((kind, m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^();,":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start)
            out.append((ch, ch, start))
        pos = m.end()
    out.append(("eof", "", len(src) + 1))
    return out


class _Parser:
    def __init__(self, src: str, names):
        self.toks = _tokenize(src)
        self.i = 0
        self.names = names

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Node:
        node = self.sum()
        tok = self.peek()
        if tok[0] != "eof":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def sum(self) -> Node:
        if self.peek()[0] == "-":
            self.take()
            node = Neg(self.tensor())
        else:
            node = self.tensor()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.tensor())
        return node

    def tensor(self) -> Node:
        node = self.product()
        while self.peek()[0] == "ox":
            self.take()
            node = BinOp("ox", node, self.product())
        return node

    def product(self) -> Node:
        node = self.power()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.power())
        return node

    def power(self) -> Node:
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            node = Pow(node, sign * int(self.take("num")[1]))
        return node

    def atom(self) -> Node:
        kind, text, pos = self.peek()
        if kind == "num":
            self.take()
            return Num(int(text))
        if kind == "(":
            self.take()
            node = self.sum()
            self.take(")")
            return node
        if kind == "name":
            self.take()
            if self.peek()[0] == "(":
                if text not in FUNCTIONS:
                    raise ExprSyntaxError(f"unknown function {text!r}", pos)
                self.take()
                args = [self.sum()]
                while self.peek()[0] in (";", ","):
                    self.take()
                    args.append(self.sum())
                self.take(")")
                if len(args) != FUNCTIONS[text]:
                    raise ExprSyntaxError(f"{text} takes {FUNCTIONS[text]} argument(s), got {len(args)}", pos)
                return Call(text, tuple(args))
            if text not in SCALAR_NAMES and self.names is not None and text not in self.names:
                raise UnknownGenerator(text, pos)
            return Sym(text)
        what = "end of input" if kind == "eof" else repr(text)
        raise ExprSyntaxError(f"unexpected {what}", pos)


def parse_expr(src: str, context=None) -> Node:
    """Parse ``src``; with a context (presentation or object with ``.pres``) generator names are checked."""
    names = None
    if context is not None:
        p = getattr(context, "pres", context)
        names = {x.name for x in p.letters} | {c.name for c in p.cartan}
    return _Parser(src, names).parse()


# ---------------------------------------------------------------------------
# evaluation


class _Scalar:
    """Truncated t-series with coefficients in Q(q)."""

    def __init__(self, coeffs, order):
        self.c = [coeffs[i] if i < len(coeffs) else ZERO for i in range(order + 1)]
        self.order = order

    def __add__(self, o):
        return _Scalar([a + b for a, b in zip(self.c, o.c)], self.order)

    def __neg__(self):
        return _Scalar([-a for a in self.c], self.order)

    def __mul__(self, o):
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.c):
            if a:
                for j in range(self.order + 1 - i):
                    out[i + j] = out[i + j] + a * o.c[j]
        return _Scalar(out, self.order)

    def inv(self):
        if not self.c[0]:
            raise EvalError("division by a scalar without constant term in t")
        a0 = self.c[0].inv()
        out = [a0]
        for n in range(1, self.order + 1):
            s = ZERO
            for k in range(1, n + 1):
                s = s + self.c[k] * out[n - k]
            out.append(-s * a0)
        return _Scalar(out, self.order)

    def as_series(self, unit) -> TSeries:
        return TSeries([unit.scale(c) if c else None for c in self.c], self.order, unit)


class Evaluator:
    """Evaluate trees in a context (``hopf``, optional classical ``target``) through t-order ``order``."""

    def __init__(self, hopf, order: int = 4, target=None):
        self.hopf = hopf
        self.pres = hopf.pres
        self.order = order
        self.target = target

    def __call__(self, node: Node):
        return self.ev(node)

    def ev(self, n: Node):
        meth = getattr(self, "_" + type(n).__name__.lower())
        return meth(n)

    def _num(self, n):
        return _Scalar([QRatFunc(n.value)], self.order)

    def _sym(self, n):
        if n.name == "q":
            return _Scalar([qpow(1)], self.order)
        if n.name == "t":
            return _Scalar([ZERO, ONE], self.order)
        return TSeries.constant(self.pres.gen(n.name), self.order)

    def _neg(self, n):
        v = self.ev(n.arg)
        return -v if isinstance(v, _Scalar) else v.scale(-1)

    def _unify(self, a, b):
        if isinstance(a, _Scalar) and isinstance(b, _Scalar):
            return a, b
        if isinstance(a, _Scalar):
            return a.as_series(b.unit), b
        if isinstance(b, _Scalar):
            return a, b.as_series(a.unit)
        if _pres(a) != _pres(b):
            raise EvalError("operands live in different algebras or tensor powers")
        return a, b

    def _binop(self, n):
        a, b = self.ev(n.left), self.ev(n.right)
        if n.op == "ox":
            if isinstance(a, _Scalar):
                a = a.as_series(self.pres.one())
            if isinstance(b, _Scalar):
                b = b.as_series(self.pres.one())
            from .twists.core import tensor_series

            return tensor_series(a, b)
        if n.op == "/":
            if not isinstance(b, _Scalar):
                raise EvalError("only division by scalars is supported")
            b = b.inv()
            a, b = self._unify(a, b)
            return a * b
        a, b = self._unify(a, b)
        if n.op == "+":
            return a + b
        if n.op == "-":
            return a + (-b if isinstance(b, _Scalar) else b.scale(-1))
        return a * b

    def _pow(self, n):
        if n.exp < 0 and isinstance(n.base, Sym) and self.pres is not None and n.base.name in self.pres.cartan_index:
            return TSeries.constant(self.pres.gen(n.base.name, n.exp), self.order)
        v = self.ev(n.base)
        if n.exp < 0:
            v = v.inv()
        out = None
        for _ in range(abs(n.exp)):
            out = v if out is None else out * v
        if out is None:
            return _Scalar([ONE], self.order)
        return out

    def _call(self, n):
        if n.name == "qexp":
            return self._qexp(*n.args)
        x = self.ev(n.args[0])
        if isinstance(x, _Scalar):
            x = x.as_series(self.pres.one())
        if isinstance(x.unit, TensorPoly):
            raise EvalError(f"{n.name} applies to elements of the algebra, not of a tensor power")
        if n.name == "coproduct":
            return coproduct(x, self.hopf)
        if n.name == "antipode":
            return x.map(lambda c: antipode(c, self.hopf))
        if self.target is None:
            raise EvalError(f"no classical limit is defined for {self.pres.name}")
        from .qgroups.integral import specialize_element

        return specialize_element(x, self.target)

    def _qexp(self, base, pref, arg):
        b = self.ev(base)
        if not isinstance(b, _Scalar) or any(b.c[1:]):
            raise EvalError("qexp base must be a power of q")
        k = next((k for k in range(-24, 25) if k and b.c[0] == qpow(k)), None)
        if k is None:
            raise EvalError("qexp base must be q^k with k != 0")
        c = self.ev(pref)
        x = self.ev(arg)
        if not isinstance(c, _Scalar):
            raise EvalError("qexp prefactor must be a scalar")
        if c.c[0]:
            raise EvalError("qexp prefactor must vanish at t = 0")
        if isinstance(x, _Scalar):
            x = x.as_series(self.pres.one())
        X = c.as_series(x.unit) * x
        out = TSeries.one(x.unit, self.order)
        pw = TSeries.one(x.unit, self.order)
        conv = QConvention("onesided", k)
        for m in range(1, self.order + 1):
            pw = pw * X
            out = out + pw.scale(q_factorial(m, conv).inv())
        return out


def _pres(s: TSeries):
    u = s.unit
    return tuple(u.pres) if isinstance(u, TensorPoly) else (u.pres,)


def evaluate(src: str, hopf, order: int = 4, target=None):
    """Parse and evaluate; scalar results come back as a TSeries over the presentation's unit."""
    node = parse_expr(src, hopf)
    v = Evaluator(hopf, order, target)(node)
    if isinstance(v, _Scalar):
        v = v.as_series(hopf.pres.one())
    return v


def parse_scalar(src: str) -> QRatFunc:
    """A rational function of q written in the expression language, e.g. "1/(1 - q^2)"."""
    node = parse_expr(src)

    def check(n):
        if isinstance(n, Sym) and n.name != "q":
            raise EvalError(f"a scalar constant may only use q, found {n.name!r}")
        if isinstance(n, Call):
            raise EvalError(f"a scalar constant cannot call {n.name}")
        for child in getattr(n, "__dict__", {}).values():
            if isinstance(child, (Num, Sym, Neg, BinOp, Pow, Call)):
                check(child)

    check(node)
    v = Evaluator.__new__(Evaluator)
    v.order, v.pres = 0, None
    out = v.ev(node)
    return out.c[0]
