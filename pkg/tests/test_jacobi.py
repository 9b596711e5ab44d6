from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from turanjacobi.exact import Poly
from turanjacobi.jacobi import (
    FamilyParams, JacobiIndex, e_n, gen_binomial, jacobi, jacobi_on_ray, jacobi_poly,
    leading_coefficient, recurrence_coeffs, rs_constants,
)
from turanjacobi.identities import default_grid

GRID = default_grid()
params = st.fractions(min_value=F(-5, 6), max_value=6, max_denominator=6)


def sympy_jacobi(n, alpha, beta):
    """Coefficients from sympy's own Jacobi implementation."""
    x = sympy.Symbol("x")
    expr = sympy.jacobi(n, sympy.Rational(alpha.numerator, alpha.denominator),
                        sympy.Rational(beta.numerator, beta.denominator), x)
    coeffs = sympy.Poly(sympy.expand(expr), x).all_coeffs()[::-1]
    return Poly(F(int(c.p), int(c.q)) for c in coeffs)


def direct_sum_at(n, alpha, beta, x):
    """The finite binomial sum evaluated at a rational point, no polynomials."""
    u, v = (x - 1) / 2, (x + 1) / 2
    return sum(gen_binomial(n + alpha, n - t) * gen_binomial(n + beta, t) * u**t * v ** (n - t)
               for t in range(n + 1))


def test_gen_binomial_examples():
    assert gen_binomial(4, 2) == 6
    assert gen_binomial(F(7, 3), 0) == 1
    assert gen_binomial(F(5, 2), 2) == F(15, 8)


def test_gen_binomial_matches_integer_binomial():
    from math import comb
    for z in range(12):
        for k in range(z + 3):
            assert gen_binomial(z, k) == comb(z, k)


@pytest.mark.parametrize("n, alpha, beta, expected", [
    (0, F(3, 2), F(7), Poly([1])),
    (1, 0, 0, Poly([0, 1])),
    (2, 0, 0, Poly([F(-1, 2), 0, F(3, 2)])),
    (1, F(1, 2), F(1, 2), Poly([0, F(3, 2)])),
])
def test_jacobi_examples(n, alpha, beta, expected):
    assert jacobi(n, alpha, beta) == expected


def test_jacobi_on_ray_examples():
    assert jacobi_on_ray(0, FamilyParams(2, 5)) == Poly([1])
    assert jacobi_on_ray(2, FamilyParams(0, 0)) == Poly([F(-1, 2), 0, F(3, 2)])
    assert jacobi_on_ray(1, FamilyParams(1, 0)) == Poly([F(1, 2), F(3, 2)])


def test_invalid_parameters():
    with pytest.raises(ValueError):
        JacobiIndex(2, F(-1), F(0))
    with pytest.raises(ValueError):
        JacobiIndex(-1, F(0), F(0))
    with pytest.raises(ValueError):
        FamilyParams(F(-1, 2), 0)


@pytest.mark.parametrize("n, alpha, beta", [
    (3, F(1, 3), F(5, 2)), (5, F(0), F(0)), (7, F(5, 2), F(0)), (12, F(6), F(1, 2)),
    (4, F(-1, 2), F(-3, 4)),
])
def test_matches_sympy(n, alpha, beta):
    assert jacobi(n, alpha, beta) == sympy_jacobi(n, alpha, beta)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12), params, params)
def test_degree_value_at_one_and_leading(n, alpha, beta):
    p = jacobi(n, alpha, beta)
    assert p.degree == n
    assert p(1) == gen_binomial(n + alpha, n)
    assert p.leading == gen_binomial(2 * n + alpha + beta, n) / 2**n
    assert p.leading == leading_coefficient(n, alpha, beta)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12), params, params)
def test_parameter_swap_symmetry(n, alpha, beta):
    assert jacobi(n, alpha, beta).compose_neg() == jacobi(n, beta, alpha) * (-1) ** n


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10), params, params, st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_matches_direct_sum(n, alpha, beta, x):
    assert jacobi(n, alpha, beta)(x) == direct_sum_at(n, alpha, beta, x)


def test_recurrence_coeffs_examples():
    rc = recurrence_coeffs(FamilyParams(0, 0))
    assert (rc.A, rc.B, rc.C, rc.D) == (Poly([0, -1]), 1, Poly([0, 1]), -1)
    rc = recurrence_coeffs(FamilyParams(1, 1))
    assert (rc.A, rc.B, rc.C, rc.D) == (Poly([0, -1]), 2, Poly([0, 3]), F(-3, 2))


@pytest.mark.parametrize("fam", GRID)
def test_recurrence_coeffs_invariants(fam):
    rc = recurrence_coeffs(fam)
    assert rc.A.degree == 1 and rc.A.leading == -1
    assert rc.C.degree == 1 and rc.C.leading == 1 + fam.a + fam.b
    assert rc.B > 0 and rc.D < 0
    if fam.a == fam.b:
        assert rc.A.coeff(0) == 0 and rc.C.coeff(0) == 0


def test_e_n_examples():
    assert e_n(1, FamilyParams(0, 0)) == Poly([0, -1])
    assert e_n(3, FamilyParams(0, 0)) == Poly([0, -1])
    e = e_n(1, FamilyParams(0, 1))
    assert e.coeff(1) == 0 and e.coeff(0) == F(-4, 3)


@pytest.mark.parametrize("fam", GRID)
@pytest.mark.parametrize("n", range(1, 9))
def test_e_n_closed_form(n, fam):
    a, b = fam.a, fam.b
    e = e_n(n, fam)
    assert e.coeff(1) == a * n + b * n - 1
    assert e.coeff(0) == -(b - a) * ((2 + a + b) * n + 1) / (2 + a + b)


def test_rs_examples():
    rs = rs_constants(1, FamilyParams(0, 0))
    assert (rs.r, rs.s) == (F(-1, 2), F(-1, 2))
    rs = rs_constants(2, FamilyParams(0, 1))
    assert rs.r + rs.s == 1
    rs = rs_constants(3, FamilyParams(F(5, 2), F(5, 2)))
    assert rs.r == rs.s == (F(5, 2) * 3 * 2 - 1) / 2


@pytest.mark.parametrize("fam", GRID)
@pytest.mark.parametrize("n", range(1, 9))
def test_rs_invariants(n, fam):
    rs = rs_constants(n, fam)
    e = e_n(n, fam)
    assert rs.r + rs.s == fam.a * n + fam.b * n - 1
    assert rs.r - rs.s == e.coeff(0)
    assert Poly([1, 1]) * rs.r + Poly([-1, 1]) * rs.s == e


def test_jacobi_poly_memo_returns_equal_objects():
    idx = JacobiIndex(6, F(1, 2), F(3))
    assert jacobi_poly(idx) is jacobi_poly(JacobiIndex(6, F(1, 2), F(3)))
