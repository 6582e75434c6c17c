"""Exact scalars: rational functions of ``q`` over the rationals.

Every coefficient in the engine is a :class:`QRatFunc`.  Values are kept as a
reduced fraction of two ``flint.fmpq_poly`` objects with a monic denominator,
so equality is structural.  Around ``q = 1`` a value can be expanded in the
local parameter ``u = q - 1`` (:func:`laurent_expand`) or evaluated
(:func:`specialize_scalar`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import flint

_P = flint.fmpq_poly
_ONE_POLY = _P([1])
_ZERO_POLY = _P([])
_SHIFT = _P([1, 1])  # q -> 1 + u

Scalar = Union["QRatFunc", int, Fraction]


class PoleAtOne(ArithmeticError):
    """Raised when a value with a pole at q = 1 is evaluated at q = 1."""


class DivisionByZero(ZeroDivisionError):
    pass


def _frac(c) -> Fraction:
    c = flint.fmpq(c)
    return Fraction(int(c.p), int(c.q))


class QRatFunc:
    """Reduced fraction ``num(q) / den(q)`` with ``den`` monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, *, _reduced: bool = False):
        if isinstance(num, QRatFunc):
            self.num, self.den, self._hash = num.num, num.den, None
            return
        if not isinstance(num, _P):
            num = _P([flint.fmpq(num.numerator, num.denominator)]) if isinstance(num, Fraction) else _P([num])
        if den is None:
            self.num, self.den, self._hash = num, _ONE_POLY, None
            return
        if not isinstance(den, _P):
            den = _P([flint.fmpq(den.numerator, den.denominator)]) if isinstance(den, Fraction) else _P([den])
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if not _reduced:
            if num.is_zero():
                num, den = _ZERO_POLY, _ONE_POLY
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num // g, den // g
                lc = den.leading_coefficient()
                if lc != 1:
                    num, den = num / lc, den / lc
        self.num, self.den, self._hash = num, den, None

    # -- construction helpers -------------------------------------------
    @staticmethod
    def q_power(k: int) -> "QRatFunc":
        return _qpow(k)

    @staticmethod
    def coerce(x: Scalar) -> "QRatFunc":
        if isinstance(x, QRatFunc):
            return x
        return QRatFunc(x)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_laurent(self) -> bool:
        """True when the denominator is a power of q."""
        d = self.den.degree()
        return d <= 0 or (self.den.coeffs()[-1] == 1 and all(c == 0 for c in self.den.coeffs()[:-1]))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QRatFunc):
            if isinstance(other, (int, Fraction)):
                other = QRatFunc(other)
            else:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return QRatFunc(a + c, _ONE_POLY, _reduced=True)
        if b == d:
            return QRatFunc(a + c, b)
        g = b.gcd(d)
        if g.is_one():
            return QRatFunc(a * d + c * b, b * d, _reduced=_coprime_sum(a, b, c, d))
        b1, d1 = b // g, d // g
        return QRatFunc(a * d1 + c * b1, b1 * d)

    __radd__ = __add__

    def __neg__(self):
        return QRatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, QRatFunc):
            if isinstance(other, (int, Fraction)):
                other = QRatFunc(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRatFunc):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                return QRatFunc(self.num * other, self.den, _reduced=True)
            if isinstance(other, Fraction):
                other = QRatFunc(other)
            else:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return ZERO
        if b.is_one() and d.is_one():
            return QRatFunc(a * c, _ONE_POLY, _reduced=True)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        den = b * d
        lc = den.leading_coefficient()
        num = a * c
        if lc != 1:
            num, den = num / lc, den / lc
        return QRatFunc(num, den, _reduced=True)

    __rmul__ = __mul__

    def inv(self) -> "QRatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return QRatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * QRatFunc.coerce(other).inv()

    def __rtruediv__(self, other):
        return QRatFunc.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return QRatFunc(self.num ** n, self.den ** n, _reduced=True)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QRatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num == _P([flint.fmpq(Fraction(other).numerator, Fraction(other).denominator)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(str(c) for c in self.num.coeffs()), tuple(str(c) for c in self.den.coeffs())))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # -- evaluation -------------------------------------------------------
    def substitute_power(self, k: int) -> "QRatFunc":
        """Return f(q^k) for a nonzero integer k."""
        if k == 1:
            return self
        if k > 0:
            return QRatFunc(_compose_power(self.num, k), _compose_power(self.den, k))
        # f(q^-m) = num(q^-m)/den(q^-m): clear with q^(m*deg)
        m = -k
        dn, dd = max(self.num.degree(), 0), max(self.den.degree(), 0)
        num = _reverse_power(self.num, m, dn)
        den = _reverse_power(self.den, m, dd)
        shift = m * (dd - dn)
        if shift >= 0:
            num = num * _P([0] * shift + [1])
        else:
            den = den * _P([0] * (-shift) + [1])
        return QRatFunc(num, den)

    def value_at_one(self) -> Fraction:
        return specialize_scalar(self)

    # -- printing -----------------------------------------------------------
    def to_string(self) -> str:
        return format_qratfunc(self)

    __str__ = to_string

    def __repr__(self):
        return f"QRatFunc('{self.to_string()}')"


def _coprime_sum(a, b, c, d) -> bool:
    # a/b + c/d with gcd(b, d) = 1 and each fraction reduced is already reduced,
    # but the product denominator b*d must still be monic.
    return b.leading_coefficient() == 1 and d.leading_coefficient() == 1


def _compose_power(p, k):
    cs = p.coeffs()
    out = [0] * (k * (len(cs) - 1) + 1) if cs else []
    for i, c in enumerate(cs):
        out[k * i] = c
    return _P(out)


def _reverse_power(p, m, deg):
    # q^(m*deg) * p(q^-m)
    cs = p.coeffs()
    out = [0] * (m * deg + 1)
    for i, c in enumerate(cs):
        out[m * (deg - i)] = c
    return _P(out)


@lru_cache(maxsize=None)
def _qpow(k: int) -> QRatFunc:
    if k >= 0:
        return QRatFunc(_P([0] * k + [1]), _ONE_POLY, _reduced=True)
    return QRatFunc(_ONE_POLY, _P([0] * (-k) + [1]), _reduced=True)


ZERO = QRatFunc(0)
ONE = QRatFunc(1)
Q = QRatFunc.q_power(1)


def qpow(k: int) -> QRatFunc:
    return _qpow(k)


def as_scalar(x: Scalar) -> QRatFunc:
    return x if isinstance(x, QRatFunc) else QRatFunc(x)


def ratfunc_arith(a: Scalar, b: Scalar | None, op: str) -> QRatFunc:
    """Field operation dispatcher: ``op`` is one of ``add``, ``mul``, ``inv``."""
    a = as_scalar(a)
    if op == "add":
        return a + as_scalar(b)
    if op == "mul":
        return a * as_scalar(b)
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# q-numbers


@dataclass(frozen=True)
class QConvention:
    """Which q-integer is meant, and in which power of q.

    ``symmetric``: [n] = (Q^n - Q^-n)/(Q - Q^-1); ``onesided``: (n) = (1 - Q^n)/(1 - Q);
    with Q = q**base.
    """

    kind: str = "onesided"
    base: int = 1

    def __post_init__(self):
        if self.kind not in ("symmetric", "onesided"):
            raise ValueError(f"unknown q-convention kind {self.kind!r}")
        if self.base == 0:
            raise ValueError("base exponent must be nonzero")


SYMMETRIC = QConvention("symmetric", 1)


class ZeroQFactorial(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def q_number(n: int, conv: QConvention = SYMMETRIC) -> QRatFunc:
    b = conv.base
    if conv.kind == "symmetric":
        return (qpow(b * n) - qpow(-b * n)) / (qpow(b) - qpow(-b))
    return (ONE - qpow(b * n)) / (ONE - qpow(b))


@lru_cache(maxsize=None)
def q_factorial(n: int, conv: QConvention = SYMMETRIC) -> QRatFunc:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_number(k, conv)
    return out


def q_binomial(m: int, n: int, conv: QConvention = SYMMETRIC) -> QRatFunc:
    if n < 0 or n > m:
        return ZERO
    return q_factorial(m, conv) / (q_factorial(n, conv) * q_factorial(m - n, conv))


# ---------------------------------------------------------------------------
# expansion at q = 1


@dataclass(frozen=True)
class USeries:
    """Truncated Laurent series in u = q - 1.

    ``coeffs[i]`` is the coefficient of ``u**(min_degree + i)``; the series is
    exact through ``u**truncation_order``.
    """

    min_degree: int
    coeffs: tuple
    truncation_order: int

    def coeff(self, k: int) -> Fraction:
        i = k - self.min_degree
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        if k > self.truncation_order:
            raise IndexError(f"u^{k} is beyond the truncation order {self.truncation_order}")
        return Fraction(0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def pole_order(self) -> int:
        return max(0, -self.min_degree) if not self.is_zero() else 0

    def __mul__(self, other: "USeries") -> "USeries":
        if self.is_zero() or other.is_zero():
            order = min(self.truncation_order + max(other.min_degree, 0), other.truncation_order + max(self.min_degree, 0))
            return USeries(0, (), order)
        lo = self.min_degree + other.min_degree
        order = min(self.truncation_order + other.min_degree, other.truncation_order + self.min_degree)
        out = []
        for k in range(lo, order + 1):
            s = Fraction(0)
            for i in range(self.min_degree, k - other.min_degree + 1):
                s += self.coeff(i) * other.coeff(k - i)
            out.append(s)
        return _make_useries(lo, out, order)


def _make_useries(lo: int, coeffs, order: int) -> USeries:
    coeffs = list(coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        lo += 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return USeries(0, (), order)
    return USeries(lo, tuple(coeffs), order)


def _valuation(p) -> int:
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    raise ValueError("zero polynomial has no valuation")


def laurent_expand(f: Scalar, order: int) -> USeries:
    """Laurent expansion of ``f`` around q = 1 in u = q - 1, exact through u**order."""
    f = as_scalar(f)
    if f.is_zero():
        return USeries(0, (), order)
    num = f.num(_SHIFT)
    den = f.den(_SHIFT)
    vn, vd = _valuation(num), _valuation(den)
    lo = vn - vd
    n = [_frac(c) for c in num.coeffs()[vn:]]
    d = [_frac(c) for c in den.coeffs()[vd:]]
    count = order - lo + 1
    out = []
    rem = n + [Fraction(0)] * max(0, count - len(n))
    for k in range(max(count, 0)):
        c = rem[k] / d[0]
        out.append(c)
        if c:
            for j in range(1, len(d)):
                if k + j < len(rem):
                    rem[k + j] -= c * d[j]
    return _make_useries(lo, out, order)


def specialize_scalar(f: Scalar) -> Fraction:
    """Exact value at q = 1; raises :class:`PoleAtOne` if f is singular there."""
    f = as_scalar(f)
    dv = f.den(1)
    if dv == 0:
        raise PoleAtOne(f"{f} has a pole at q = 1")
    return _frac(f.num(1) / dv)


def pole_order_at_one(f: Scalar) -> int:
    f = as_scalar(f)
    if f.is_zero():
        return 0
    den = f.den(_SHIFT)
    num = f.num(_SHIFT)
    return max(0, _valuation(den) - _valuation(num))


# ---------------------------------------------------------------------------
# serialization


def _format_poly(p) -> str:
    cs = [_frac(c) for c in p.coeffs()]
    terms = [(k, c) for k, c in enumerate(cs) if c != 0]
    if not terms:
        return "0"
    parts = []
    for i, (k, c) in enumerate(reversed(terms)):
        sign = "-" if c < 0 else "+"
        body = f"{abs(c)}*q^{k}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def format_qratfunc(f: QRatFunc) -> str:
    """Canonical text form ``(num)/(den)`` with integer coefficients."""
    num, den = f.num, f.den
    if num.is_zero():
        return "0"
    # clear rational coefficients: scale both by lcm of coefficient denominators
    scale = flint.fmpz(1)
    for c in list(num.coeffs()) + list(den.coeffs()):
        c = flint.fmpq(c)
        scale = scale * c.q // scale.gcd(c.q)
    num, den = num * scale, den * scale
    # make denominator content positive and primitive
    g = flint.fmpz(0)
    for c in list(num.coeffs()) + list(den.coeffs()):
        g = g.gcd(flint.fmpq(c).p)
    if g != 1 and g != 0:
        num, den = num / g, den / g
    if den.is_one():
        return _format_poly(num)
    return f"({_format_poly(num)})/({_format_poly(den)})"


_TERM_RE = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)\*q\^(\d+)\s*")


def _parse_poly(s: str):
    s = s.strip()
    if s == "0":
        return _ZERO_POLY
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed polynomial {s!r} at {pos}")
        sign, c, k = m.groups()
        val = Fraction(c) * (-1 if sign == "-" else 1)
        coeffs[int(k)] = coeffs.get(int(k), Fraction(0)) + val
        pos = m.end()
    top = max(coeffs)
    return _P([flint.fmpq(coeffs.get(i, Fraction(0)).numerator, coeffs.get(i, Fraction(0)).denominator) for i in range(top + 1)])


def parse_qratfunc(s: str) -> QRatFunc:
    """Inverse of :func:`format_qratfunc`."""
    s = s.strip()
    if s.startswith("("):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        num = _parse_poly(s[1:i])
        rest = s[i + 1:].strip()
        if not rest:
            return QRatFunc(num)
        if not rest.startswith("/(") or not rest.endswith(")"):
            raise ValueError(f"malformed rational function {s!r}")
        return QRatFunc(num, _parse_poly(rest[2:-1]))
    return QRatFunc(_parse_poly(s))


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
