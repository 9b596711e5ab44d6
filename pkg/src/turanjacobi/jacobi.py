"""Exact Jacobi polynomials and the coefficient algebra of the (an, bn) ray.

On the ray the parameters grow with the degree, ``alpha_n = a*n`` and
``beta_n = b*n``, so the usual three-term recurrence in ``n`` does not apply;
each polynomial is expanded directly from its finite binomial sum

    P_n^(alpha,beta)(x) = sum_t C(n+alpha, n-t) C(n+beta, t) u^t v^(n-t),
    u = (x-1)/2,  v = (x+1)/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import Poly, Scalar


@dataclass(frozen=True)
class FamilyParams:
    """Slopes of the parameter ray: ``alpha_n = a*n``, ``beta_n = b*n``."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a < 0 or self.b < 0:
            raise ValueError(f"ray slopes must be nonnegative, got a={self.a}, b={self.b}")

    def alpha(self, n: int) -> Fraction:
        return self.a * n

    def beta(self, n: int) -> Fraction:
        return self.b * n

    def index(self, degree: int, k: int) -> "JacobiIndex":
        """Degree ``degree`` polynomial carrying the ray parameters of index ``k``."""
        return JacobiIndex(degree, self.a * k, self.b * k)


@dataclass(frozen=True)
class JacobiIndex:
    n: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"degree must be a nonnegative integer, got {self.n!r}")
        if self.alpha <= -1 or self.beta <= -1:
            raise ValueError(
                f"Jacobi parameters must exceed -1, got alpha={self.alpha}, beta={self.beta}"
            )


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """A(x), B, C(x), D of the ray-substituted differentiation formulas.

    (1-x^2) P_n^{n}'     = n A P_n^{n} + n B P_{n-1}^{n}
    (1-x^2) P_n^{n+1}'   = (n+1) C P_n^{n+1} + (n+1) D P_{n+1}^{n+1}

    where a superscript k means parameters (a*k, b*k).
    """

    A: Poly
    B: Fraction
    C: Poly
    D: Fraction


@dataclass(frozen=True)
class RSConstants:
    r: Fraction
    s: Fraction


def gen_binomial(z: Scalar, k: int) -> Fraction:
    """C(z, k) = prod_{i=1..k} (z - k + i) / i, valid for any rational z."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    z = Fraction(z)
    out = Fraction(1)
    for i in range(1, k + 1):
        out = out * (z - k + i) / i
    return out


@lru_cache(maxsize=256)
def _shifted_basis(n: int) -> tuple[tuple[int, ...], ...]:
    # integer coefficients of (x-1)^t (x+1)^(n-t), t = 0..n
    rows = []
    for t in range(n + 1):
        s = n - t
        rows.append(tuple(
            sum(comb(t, j) * (-1) ** (t - j) * comb(s, k - j)
                for j in range(max(0, k - s), min(t, k) + 1))
            for k in range(n + 1)
        ))
    return tuple(rows)


@lru_cache(maxsize=4096)
def _jacobi(n: int, alpha: Fraction, beta: Fraction) -> Poly:
    basis = _shifted_basis(n)
    out = [Fraction(0)] * (n + 1)
    for t in range(n + 1):
        c = gen_binomial(n + alpha, n - t) * gen_binomial(n + beta, t)
        if c:
            for k, m in enumerate(basis[t]):
                if m:
                    out[k] += c * m
    scale = Fraction(1, 2**n)
    return Poly(c * scale for c in out)


def jacobi_poly(idx: JacobiIndex) -> Poly:
    """Exact monomial-basis coefficients of P_n^(alpha,beta)."""
    return _jacobi(idx.n, idx.alpha, idx.beta)


def jacobi(n: int, alpha: Scalar, beta: Scalar) -> Poly:
    return jacobi_poly(JacobiIndex(n, Fraction(alpha), Fraction(beta)))


def jacobi_on_ray(n: int, fam: FamilyParams) -> Poly:
    """P_n^(a*n, b*n)."""
    return jacobi_poly(fam.index(n, n))


def leading_coefficient(n: int, alpha: Scalar, beta: Scalar) -> Fraction:
    """Leading coefficient of P_n^(alpha,beta): 2^-n C(2n+alpha+beta, n)."""
    return gen_binomial(2 * n + Fraction(alpha) + Fraction(beta), n) / 2**n


def recurrence_coeffs(fam: FamilyParams) -> RecurrenceCoeffs:
    a, b = fam.a, fam.b
    shift = (b - a) / (2 + a + b)
    return RecurrenceCoeffs(
        A=Poly((-shift, -1)),
        B=2 * (1 + a) * (1 + b) / (2 + a + b),
        C=Poly((-shift, 1)) * (1 + a + b),
        D=-2 * (1 + a + b) / (2 + a + b),
    )


def e_n(n: int, fam: FamilyParams) -> Poly:
    """E_n = (n+1) A + n C, a degree-one polynomial with x-coefficient an+bn-1."""
    if n < 1:
        raise ValueError("E_n needs n >= 1")
    rc = recurrence_coeffs(fam)
    return rc.A * (n + 1) + rc.C * n


def rs_constants(n: int, fam: FamilyParams) -> RSConstants:
    """Constants r, s with r(x+1) + s(x-1) == E_n(x)."""
    e = e_n(n, fam)
    slope, const = e.coeff(1), e.coeff(0)
    return RSConstants(r=(slope + const) / 2, s=(slope - const) / 2)
