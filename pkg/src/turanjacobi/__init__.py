"""Exact and floating-point tools for Jacobi polynomials P_n^(an, bn) and the
Turan-type determinant built from them."""
from .exact import Poly, Rational, parse_rational, format_rational
from .jacobi import (
    FamilyParams, JacobiIndex, RecurrenceCoeffs, RSConstants,
    gen_binomial, jacobi_poly, jacobi_on_ray, recurrence_coeffs, e_n, rs_constants,
)
from .turan import (
    TuranDeterminant, SignCertificate, build_delta, delta_at_one,
    leading_coeff_closed_form, sturm_chain, count_real_roots, certify_theorem,
)
from .identities import (
    IdentityReport, wronskian, check_lemma1, check_delta_to_derivative,
    check_derivative_recurrence_lower, check_derivative_recurrence_upper,
)

__version__ = "0.1.0"
