"""
Large-n sweeps in binary64
==========================

For x >= 1 the finite sum has only nonnegative terms, so log-gamma binomials
give full relative accuracy even where the exact coefficients are enormous.
Below x = 1 the sum cancels and rows carry an error estimate instead.
"""
# %%
import numpy as np

from turanjacobi import FamilyParams
from turanjacobi.numeric import EvalRequest, eval_jacobi_float, parse_grid, sweep_delta

print(eval_jacobi_float(2, 0.0, 0.0, 2.0))
print(eval_jacobi_float(120, 240.0, 60.0, 1.25))

# %%
fam = FamilyParams(1, 1)
rows = sweep_delta(EvalRequest(list(range(1, 41)), fam, parse_grid("1:10:0.5")))
signs = {r.sign for r in rows}
print("signs for x >= 1:", sorted(signs))
print("n=40 at x=10:", rows[-1].delta_value)

# %%
# Outside the theorem's range the picture is exploratory only; unreliable rows are flagged.
rows = sweep_delta(EvalRequest([5, 15, 25], FamilyParams(2, 1), parse_grid("-3:1:0.25")))
for r in rows[:17]:
    flag = " (unreliable)" if r.unreliable else ""
    print(f"n={r.n} x={r.x:+.2f} sign={r.sign:+d} rel_err~{r.est_rel_err:.1e}{flag}")
print("flagged rows:", sum(r.unreliable for r in rows), "of", len(rows))
