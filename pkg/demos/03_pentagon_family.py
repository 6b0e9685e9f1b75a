# %% [markdown]
# The three-parameter pentagon family
#
# B sits at the origin, E and F are unit vectors at angle theta = pi - 2*gamma,
# and A, C are placed so that E and F are unit struts of the sides AB and BC.
# Three closed forms of the perimeter agree with each other and with the
# polygon itself.

# %%
import math

import numpy as np

from strutgeo import PentagonParams, build_pentagon, perimeter, perimeter_A, perimeter_B, perimeter_C
from strutgeo.pentagon import equality_pattern, gradient_closed_form, in_convex_position, pentagon_points

p = PentagonParams(alpha=1.2, beta=1.1, gamma=1.3)
for name, xy in pentagon_points(p).items():
    print(name, np.round(xy, 6))

# %%
print("A-form", perimeter_A(p.alpha, p.beta, p.gamma))
print("B-form", perimeter_B(p.alpha, p.beta, p.theta))
print("C-form", perimeter_C(p.u, p.v, p.gamma))
print("polygon", perimeter(build_pentagon(p)), "convex position:", in_convex_position(p))

# %%
# The perimeter-3 configurations of the feasible set.
q = math.acos(0.25)
for params in [(math.pi / 3,) * 3, (math.pi / 3, math.pi / 2, math.pi / 3), (q, q, q),
               (math.acos(0.2), math.acos(0.3), math.pi / 2)]:
    p = PentagonParams(*params)
    print(equality_pattern(p), round(float(perimeter_A(*params)), 12))

# %%
# The analytic gradient, e.g. for descent experiments.
print(gradient_closed_form(PentagonParams(1.2, 1.2, 1.2)))
