"""
Exact Jacobi polynomials on the (an, bn) ray
============================================

Builds P_n^(a n, b n) with rational coefficients straight from the finite
binomial sum and looks at a few of its exact properties.
"""
# %%
from fractions import Fraction as F

from turanjacobi import FamilyParams, gen_binomial, jacobi_on_ray, jacobi_poly, JacobiIndex

# Legendre is the a = b = 0 ray
for n in range(4):
    print(n, jacobi_on_ray(n, FamilyParams(0, 0)))

# %%
# Non-integer slopes stay exact: binomials are finite products, never factorials.
fam = FamilyParams(F(1, 2), F(5, 2))
p = jacobi_on_ray(5, fam)
print(p)
print("P(1)          =", p(1), "==", gen_binomial(5 + fam.a * 5, 5))
print("leading coeff =", p.leading, "==", gen_binomial(10 + (fam.a + fam.b) * 5, 5) / 2**5)

# %%
# Swapping alpha and beta reflects x -> -x up to the sign (-1)^n.
idx, swapped = JacobiIndex(5, F(5, 2), F(25, 2)), JacobiIndex(5, F(25, 2), F(5, 2))
print(jacobi_poly(idx).compose_neg() == -jacobi_poly(swapped))
