# %% [markdown]
# Extremal constants and the critical-point catalogue
#
# The zero curve theta = g(alpha) of the stationarity function has its
# minimum theta0 at alpha0 = arccos(sqrt(24 - 3 sqrt(37)) / 6).  On the
# boundary slice cos(alpha) + cos(beta) = 1/2 the perimeter has a small
# set of critical points: two symmetric ones and an asymmetric pair.

# %%
import math

import numpy as np

from strutgeo import case1_critical_points, case2_critical_points, extremal_constants, g_curve
from strutgeo.pentagon import stationarity_D, verify_min_over_omega, z1_quartic_roots

k = extremal_constants()
print(f"theta0 = {k.theta0:.12f} at alpha = {k.alpha_argmin:.10f} (closed form {k.alpha0:.10f})")
print(f"tan(theta0) from radicals: {k.tan_theta0_radical:.12f} vs {math.tan(k.theta0):.12f}")

# %%
alphas = np.linspace(math.pi / 3, 5 * math.pi / 12, 6)
for a in alphas:
    print(f"g({a:.4f}) = {g_curve(a):.10f}   D = {stationarity_D(a, g_curve(a)):+.1e}")

# %%
print("quartic roots:", sorted(z1_quartic_roots()))
for c in case1_critical_points() + case2_critical_points():
    x, y, z = c.substitution
    print(f"x={x:.10f} y={y:.10f} z={z:.10f}  perimeter {c.perimeter:.10f}")

# %%
# Grid plus local refinement recovers the global minimum 3 over the feasible set.
res = verify_min_over_omega()
print("min perimeter", res.min_perimeter)
print(sorted({pat for _, _, pat in res.minimizers}))
