"""Exact rational scalars and dense univariate polynomials over Q.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator.  :class:`Poly` stores coefficients in ascending
order (``coeffs[i]`` multiplies ``x**i``) and is immutable.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

# degree of the zero polynomial; compares below every integer degree
NEG_INF_DEGREE = -math.inf

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"k"`` into a Fraction.

    Decimal notation is rejected on purpose so that nothing inexact slips in.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Scalar) -> str:
    """Canonical ``"p/q"`` string; integers print without a denominator."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Dense polynomial with Fraction coefficients.

    Construction trims trailing zeros, so the zero polynomial has an empty
    coefficient tuple and equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> "Poly":
        """The polynomial ``c0 + c1*x``."""
        return cls((c0, c1))

    @property
    def degree(self):
        if not self.coeffs:
            return NEG_INF_DEGREE
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    # ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            return Poly(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return poly_divrem(self, _as_poly(other))

    def __floordiv__(self, other):
        return poly_divrem(self, _as_poly(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, _as_poly(other))[1]

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self) -> "Poly":
        return poly_derivative(self)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.leading

    def compose_neg(self) -> "Poly":
        """``p(-x)``."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    # comparison / display ----------------------------------------------

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = format_rational(c) + ("*" + mono if mono else "")
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(p):
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly((p,))
    return NotImplemented


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_derivative(p: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_eval(p: Poly, x: Scalar) -> Fraction:
    """Horner evaluation at a rational point (exact)."""
    acc = Fraction(0)
    x = Fraction(x)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divrem(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``p = q*quot + rem`` with ``deg rem < deg q``."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.coeffs[-1]
    if len(rem) <= dq:
        return Poly(), p
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - dq - 1, -1, -1):
        c = rem[k + dq] / lead
        quot[k] = c
        if c:
            for j, qj in enumerate(q.coeffs):
                rem[k + j] -= c * qj
    return Poly(quot), Poly(rem[:dq])


def _primitive(p: Poly) -> Poly:
    # scale to integer coefficients with content 1 (sign kept)
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    return Poly(Fraction(c, g) for c in ints)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via the Euclidean remainder sequence over Q.

    Remainders are replaced by their primitive parts at each step to keep
    coefficient growth in check.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        _, r = poly_divrem(a, b)
        a, b = b, (_primitive(r) if not r.is_zero() else r)
    return a.monic()


def square_free_part(p: Poly) -> Poly:
    """``p / gcd(p, p')``: same distinct roots, all simple."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    quot, rem = poly_divrem(p, g)
    assert rem.is_zero()
    return quot


def sign(q: Scalar) -> int:
    return (q > 0) - (q < 0)


def poly_from_roots(roots: Sequence[Scalar], lead: Scalar = 1) -> Poly:
    p = Poly((lead,))
    for r in roots:
        p = p * Poly((-Fraction(r), 1))
    return p
