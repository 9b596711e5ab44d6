"""
Differentiation formulas and the lemma, checked exactly
=======================================================

Every identity is checked as an equality of rational coefficient vectors.
A residual of ``0`` means the identity holds for that (n, a, b).
"""
# %%
from fractions import Fraction as F

from turanjacobi import FamilyParams, e_n, recurrence_coeffs, rs_constants
from turanjacobi.exact import Poly
from turanjacobi.identities import IDENTITY_CHECKS, certify_wronskian, wronskian

fam = FamilyParams(1, 2)
rc = recurrence_coeffs(fam)
print("A =", rc.A, " B =", rc.B, " C =", rc.C, " D =", rc.D)

for n in (1, 4, 7):
    for name, check in IDENTITY_CHECKS.items():
        print(f"n={n} {name:<28} residual = {check(n, fam).residual}")

# %%
# E_n = (n+1)A + nC and the constants r, s with r(x+1) + s(x-1) = E_n.
n = 3
e = e_n(n, fam)
rs = rs_constants(n, fam)
print("E_3 =", e)
print("r, s =", rs.r, rs.s)
print("rebuilt:", Poly([1, 1]) * rs.r + Poly([-1, 1]) * rs.s)

# The same r, s with a factor x inside give a quadratic, which cannot be E_n.
slope = fam.a * n + fam.b * n - 1
shift = ((2 + fam.a + fam.b) * n + 1) * (fam.b - fam.a) / (2 + fam.a + fam.b)
r_x, s_x = Poly([shift, slope]) / 2, Poly([-shift, slope]) / 2
print("with x factor:", Poly([1, 1]) * r_x + Poly([-1, 1]) * s_x)

# %%
# The Wronskian at fixed parameters (a(n+1), b(n+1)) has no real roots.
w = wronskian(3, fam)
cert = certify_wronskian(3, fam)
print("W_3 =", w)
print(cert.verdict, "| real roots:", cert.root_count_inside, "| W_3(0) =", w(0))
