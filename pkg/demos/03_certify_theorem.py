"""
Certifying Delta_n(x) < 0 for x > 1
===================================

Delta_n = P_n^{n} P_n^{n+1} - P_{n-1}^{n} P_{n+1}^{n+1}. The certificate
divides out the root at x = 1, then counts the real roots right of 1 with a
Sturm sequence. Zero roots plus a negative sample proves the sign.
"""
# %%
from fractions import Fraction as F

from turanjacobi import FamilyParams, build_delta, certify_theorem, delta_at_one, leading_coeff_closed_form
from turanjacobi.identities import default_grid
from turanjacobi.turan import sturm_chain

fam = FamilyParams(F(5, 2), F(1, 2))
d = build_delta(3, fam).delta
print("Delta_3 =", d)
print("Delta_3(1) =", delta_at_one(3, fam))
print("leading coefficient:", d.leading, "closed form:", leading_coeff_closed_form(3, fam))

# %%
cert = certify_theorem(3, fam)
print(cert.verdict, "multiplicity at 1:", cert.multiplicity_at_base,
      "roots in (1, oo):", cert.root_count_inside, "variations:", cert.variations)

# %%
# The whole default grid, n = 1..6.
tally = {}
for n in range(1, 7):
    for f in default_grid():
        v = certify_theorem(n, f).verdict
        tally[v] = tally.get(v, 0) + 1
print(tally)

# %%
# A Sturm chain for a small case, for inspection.
for p in sturm_chain(build_delta(1, FamilyParams(1, 0)).delta):
    print("  ", p)
