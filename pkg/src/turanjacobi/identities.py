"""Exact checks of the polynomial identities behind the Turan-type inequality.

Each check builds both sides over Q and stores the difference as a residual.
An identity holds only when the residual is the zero polynomial; nothing is
sampled.  Fractions 1/n and 1/(n+1) are cleared by multiplying through by
n(n+1), so residuals are reported in that cleared form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .exact import Poly
from .jacobi import FamilyParams, e_n, jacobi_poly, recurrence_coeffs, rs_constants
from .turan import build_delta, certify_positive_everywhere, SignCertificate

ONE_MINUS_X2 = Poly((1, 0, -1))

DEFAULT_N_MAX = 8
DEFAULT_SLOPES = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 2))


def default_grid(slopes: Iterable = DEFAULT_SLOPES) -> list[FamilyParams]:
    slopes = sorted(Fraction(s) for s in slopes)
    return [FamilyParams(a, b) for a in slopes for b in slopes]


@dataclass(frozen=True)
class IdentityReport:
    name: str
    n: int
    fam: FamilyParams
    residual: Poly

    @property
    def holds(self) -> bool:
        return self.residual.is_zero()


def _family(n: int, fam: FamilyParams):
    """(P_n^{n}, P_{n-1}^{n}, P_n^{n+1}, P_{n+1}^{n+1}) on the ray."""
    return (
        jacobi_poly(fam.index(n, n)),
        jacobi_poly(fam.index(n - 1, n)),
        jacobi_poly(fam.index(n, n + 1)),
        jacobi_poly(fam.index(n + 1, n + 1)),
    )


def _require_n(n):
    if n < 1:
        raise ValueError("identity checks need n >= 1")


def check_derivative_recurrence_lower(n: int, fam: FamilyParams) -> IdentityReport:
    """(1-x^2) P_n^{n}' = n A P_n^{n} + n B P_{n-1}^{n}."""
    _require_n(n)
    rc = recurrence_coeffs(fam)
    p, p_prev, _, _ = _family(n, fam)
    residual = ONE_MINUS_X2 * p.derivative() - rc.A * p * n - p_prev * (n * rc.B)
    return IdentityReport("derivative_recurrence_lower", n, fam, residual)


def check_derivative_recurrence_upper(n: int, fam: FamilyParams) -> IdentityReport:
    """(1-x^2) P_n^{n+1}' = (n+1) C P_n^{n+1} + (n+1) D P_{n+1}^{n+1}."""
    _require_n(n)
    rc = recurrence_coeffs(fam)
    _, _, q, q_next = _family(n, fam)
    residual = ONE_MINUS_X2 * q.derivative() - rc.C * q * (n + 1) - q_next * ((n + 1) * rc.D)
    return IdentityReport("derivative_recurrence_upper", n, fam, residual)


def wronskian(n: int, fam: FamilyParams) -> Poly:
    """P_n P_{n+1}' - P_{n+1} P_n' with both factors at parameters (a(n+1), b(n+1))."""
    _require_n(n)
    _, _, q, q_next = _family(n, fam)
    return q * q_next.derivative() - q_next * q.derivative()


def certify_wronskian(n: int, fam: FamilyParams) -> SignCertificate:
    return certify_positive_everywhere(wronskian(n, fam), sample=0)


def check_lemma1(n: int, fam: FamilyParams) -> IdentityReport:
    """n(n+1) [E_n Delta_n + (x^2-1) Delta_n'] = (x^2-1) [n P_n^{n} P_n^{n+1}' - (n+1) P_n^{n}' P_n^{n+1}]."""
    _require_n(n)
    p, _, q, _ = _family(n, fam)
    delta = build_delta(n, fam).delta
    x2m1 = -ONE_MINUS_X2
    lhs = (e_n(n, fam) * delta + x2m1 * delta.derivative()) * (n * (n + 1))
    rhs = x2m1 * (p * q.derivative() * n - p.derivative() * q * (n + 1))
    return IdentityReport("lemma1", n, fam, lhs - rhs)


def check_delta_to_derivative(n: int, fam: FamilyParams) -> IdentityReport:
    """n(n+1) B Delta_n = (1-x^2) [n P_n^{n} P_{n+1}^{n+1}' - (n+1) P_{n+1}^{n+1} P_n^{n}']."""
    _require_n(n)
    rc = recurrence_coeffs(fam)
    p, _, _, q_next = _family(n, fam)
    delta = build_delta(n, fam).delta
    lhs = delta * (rc.B * n * (n + 1))
    rhs = ONE_MINUS_X2 * (p * q_next.derivative() * n - q_next * p.derivative() * (n + 1))
    return IdentityReport("delta_to_derivative", n, fam, lhs - rhs)


def check_rs_reconstruction(n: int, fam: FamilyParams) -> IdentityReport:
    """r(x+1) + s(x-1) = E_n with constant r, s."""
    _require_n(n)
    rs = rs_constants(n, fam)
    residual = Poly((1, 1)) * rs.r + Poly((-1, 1)) * rs.s - e_n(n, fam)
    return IdentityReport("rs_reconstruction", n, fam, residual)


IDENTITY_CHECKS: dict[str, Callable[[int, FamilyParams], IdentityReport]] = {
    "derivative_recurrence_lower": check_derivative_recurrence_lower,
    "derivative_recurrence_upper": check_derivative_recurrence_upper,
    "lemma1": check_lemma1,
    "delta_to_derivative": check_delta_to_derivative,
}


def run_identity_suite(n_max: int = DEFAULT_N_MAX, grid=None) -> Iterator[IdentityReport]:
    """All registered checks in (n, a, b, check) order."""
    if grid is None:
        grid = default_grid()
    grid = sorted(grid, key=lambda f: (f.a, f.b))
    for n in range(1, n_max + 1):
        for fam in grid:
            for check in IDENTITY_CHECKS.values():
                yield check(n, fam)
