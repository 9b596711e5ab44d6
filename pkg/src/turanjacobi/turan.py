"""The Turan-type determinant on the ray and its exact sign certification.

    Delta_n = P_n^{n} P_n^{n+1} - P_{n-1}^{n} P_{n+1}^{n+1}

(superscript k: parameters (a*k, b*k)).  Negativity on (1, oo) is certified
by removing the root at x = 1 exactly and counting the remaining real roots
right of 1 with a Sturm sequence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .exact import Poly, poly_divrem, square_free_part, sign
from .jacobi import FamilyParams, gen_binomial, jacobi_poly, leading_coefficient

Endpoint = Union[Fraction, int, float]  # float only for +-inf

OPEN_RIGHT_OF = "open-right-of"
WHOLE_LINE = "whole-line"

CERTIFIED_NEGATIVE = "certified-negative"
CERTIFIED_POSITIVE = "certified-positive"
NOT_CERTIFIED = "not-certified"


@dataclass(frozen=True)
class TuranDeterminant:
    n: int
    fam: FamilyParams
    delta: Poly


@dataclass(frozen=True)
class SignCertificate:
    """Record that ``target`` keeps a strict sign on ``interval``.

    ``root_count_inside`` is a Sturm count on the square-free part of the
    target with its ``base_point`` roots divided out.  Everything here is
    exact, so a third party can recompute each field.
    """

    target: Poly
    interval: str
    base_point: Optional[Fraction]
    multiplicity_at_base: int
    root_count_inside: int
    sample_point: Fraction
    sample_sign: int
    verdict: str
    variations: tuple[int, int] = (0, 0)
    diagnostics: tuple[str, ...] = field(default=())


def build_delta(n: int, fam: FamilyParams) -> TuranDeterminant:
    if n < 1:
        raise ValueError("Delta_n needs n >= 1 (P_{n-1} is undefined for n = 0)")
    p_nn = jacobi_poly(fam.index(n, n))
    p_n_next = jacobi_poly(fam.index(n, n + 1))
    p_prev = jacobi_poly(fam.index(n - 1, n))
    p_next = jacobi_poly(fam.index(n + 1, n + 1))
    return TuranDeterminant(n, fam, p_nn * p_n_next - p_prev * p_next)


def delta_at_one(n: int, fam: FamilyParams) -> Fraction:
    """Delta_n(1) by evaluating the polynomial and, separately, from P(1) = C(n+alpha, n).

    Raises ``ArithmeticError`` if the two routes disagree.
    """
    via_poly = build_delta(n, fam).delta(1)
    a = fam.a
    via_binom = gen_binomial(n + a * n, n) * gen_binomial(n + a * (n + 1), n) - gen_binomial(
        n - 1 + a * n, n - 1
    ) * gen_binomial(n + 1 + a * (n + 1), n + 1)
    if via_poly != via_binom:
        raise ArithmeticError(f"Delta_{n}(1): polynomial gives {via_poly}, binomials give {via_binom}")
    return via_poly


def leading_coeff_bracket(n: int, fam: FamilyParams) -> Fraction:
    """(2+c)[ ((2+c)n+1)/((1+c)n+1) - ((2+c)(n+1)+1)/((1+c)(n+1)+1) ], c = a+b.

    Always negative: it simplifies to -(2+c) / (((1+c)n+1)((1+c)(n+1)+1)).
    """
    c = fam.a + fam.b
    return (2 + c) * ((2 + c) * n + 1) / ((1 + c) * n + 1) - (2 + c) * (
        (2 + c) * (n + 1) + 1
    ) / ((1 + c) * (n + 1) + 1)


def leading_coeff_prefactor(n: int, fam: FamilyParams) -> Fraction:
    """Positive K_n with K_n * leading_coeff_bracket(n) equal to the x^{2n} coefficient.

    Built from the leading coefficients k_m(alpha, beta) = 2^-m C(2m+alpha+beta, m):
    the x^{2n} coefficient factors as k_{n-1}(S_n) k_n(S_{n+1}) times
    (2+c)/(2(1+c)) (1/(n+1) - 1/n), and that last factor equals the bracket
    times ((1+c)n+1)((1+c)(n+1)+1) / (2(1+c)n(n+1)).
    """
    a, b = fam.a, fam.b
    c = a + b
    k_prev = leading_coefficient(n - 1, a * n, b * n)
    k_cur = leading_coefficient(n, a * (n + 1), b * (n + 1))
    rescale = ((1 + c) * n + 1) * ((1 + c) * (n + 1) + 1) / (2 * (1 + c) * n * (n + 1))
    return k_prev * k_cur * rescale


def leading_coeff_closed_form(n: int, fam: FamilyParams) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    return leading_coeff_prefactor(n, fam) * leading_coeff_bracket(n, fam)


def leading_coeff_from_factors(n: int, fam: FamilyParams) -> Fraction:
    """k_n(S_n) k_n(S_{n+1}) - k_{n-1}(S_n) k_{n+1}(S_{n+1}) directly."""
    a, b = fam.a, fam.b
    lc = leading_coefficient
    return lc(n, a * n, b * n) * lc(n, a * (n + 1), b * (n + 1)) - lc(n - 1, a * n, b * n) * lc(
        n + 1, a * (n + 1), b * (n + 1)
    )


# Sturm machinery ---------------------------------------------------------


def sturm_chain(p: Poly) -> list[Poly]:
    """p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k) until a constant.

    ``p`` must be square-free, otherwise the chain ends in a nonconstant gcd.
    """
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p]
    if p.degree == 0:
        return chain
    chain.append(p.derivative())
    while chain[-1].degree > 0:
        _, r = poly_divrem(chain[-2], chain[-1])
        if r.is_zero():
            raise ValueError("polynomial is not square-free")
        chain.append(-r)
    return chain


def _sign_at(p: Poly, x) -> int:
    if x == math.inf:
        return sign(p.leading)
    if x == -math.inf:
        return sign(p.leading) * (-1 if p.degree % 2 else 1)
    return sign(p(x))


def sign_variations(chain: list[Poly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(p: Poly, left=-math.inf, right=math.inf, chain=None) -> int:
    """Number of distinct real roots of square-free ``p`` in ``(left, right]``."""
    if left != -math.inf and p(left) == 0:
        raise ValueError(f"p({left}) == 0; divide the root out before counting")
    if chain is None:
        chain = sturm_chain(p)
    return sign_variations(chain, left) - sign_variations(chain, right)


def root_multiplicity(p: Poly, point) -> tuple[int, Poly]:
    """Largest m with (x - point)^m | p, and the cofactor."""
    if p.is_zero():
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    lin = Poly((-Fraction(point), 1))
    m, q = 0, p
    while True:
        quot, rem = poly_divrem(q, lin)
        if not rem.is_zero():
            return m, q
        m, q = m + 1, quot


def certify_negative_right_of(p: Poly, base=1, sample=None) -> SignCertificate:
    """Certify p < 0 on (base, oo) and p(base) == 0."""
    base = Fraction(base)
    sample = Fraction(sample) if sample is not None else base + 1
    diag = []
    if p.is_zero():
        return SignCertificate(p, OPEN_RIGHT_OF, base, 0, 0, sample, 0, NOT_CERTIFIED,
                               diagnostics=("target is the zero polynomial",))
    m, q = root_multiplicity(p, base)
    sf = square_free_part(q)
    chain = sturm_chain(sf)
    v_left, v_right = sign_variations(chain, base), sign_variations(chain, math.inf)
    inside = v_left - v_right
    s = sign(q(sample))
    if m < 1:
        diag.append(f"no root at x={base}")
    if inside != 0:
        diag.append(f"{inside} real root(s) in ({base}, oo)")
    if s != -1:
        diag.append(f"sample sign at x={sample} is {s}")
    verdict = CERTIFIED_NEGATIVE if not diag else NOT_CERTIFIED
    return SignCertificate(p, OPEN_RIGHT_OF, base, m, inside, sample, s, verdict,
                           (v_left, v_right), tuple(diag))


def certify_positive_everywhere(p: Poly, sample=0) -> SignCertificate:
    """Certify p > 0 on the whole real line: no real roots and a positive sample."""
    sample = Fraction(sample)
    if p.is_zero():
        return SignCertificate(p, WHOLE_LINE, None, 0, 0, sample, 0, NOT_CERTIFIED,
                               diagnostics=("target is the zero polynomial",))
    sf = square_free_part(p)
    chain = sturm_chain(sf)
    v_left, v_right = sign_variations(chain, -math.inf), sign_variations(chain, math.inf)
    inside = v_left - v_right
    s = sign(p(sample))
    diag = []
    if inside != 0:
        diag.append(f"{inside} real root(s)")
    if s != 1:
        diag.append(f"sample sign at x={sample} is {s}")
    verdict = CERTIFIED_POSITIVE if not diag else NOT_CERTIFIED
    return SignCertificate(p, WHOLE_LINE, None, 0, inside, sample, s, verdict,
                           (v_left, v_right), tuple(diag))


def certify_theorem(n: int, fam: FamilyParams) -> SignCertificate:
    """Exact certificate that Delta_n(1) = 0 and Delta_n(x) < 0 for all x > 1."""
    return certify_negative_right_of(build_delta(n, fam).delta, base=1, sample=2)
