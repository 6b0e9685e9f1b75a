# %% [markdown]
# Difference bodies and the symmetric Delta property
#
# D(P) = P + (-P) is centrally symmetric about the origin and has twice the
# perimeter of P.  When P has the Delta property, D(P) contains, for each of
# its side vectors v, the rectangle inscribed in the unit circle with a side
# equal to v.

# %%
import numpy as np

from strutgeo import difference_body, has_delta_property, has_delta_s_property, perimeter, symmetry_center
from strutgeo.geom import random_convex_polygon

rng = np.random.default_rng(0)

# %%
P = random_convex_polygon(rng, 5, radius=1.2)
D = difference_body(P)
print("L(P) =", perimeter(P), " L(D(P)) =", perimeter(D))
print("center of D(P):", symmetry_center(D))

# %%
# Sample polygons until a few have the Delta property, then look at their difference bodies.
hits = 0
while hits < 5:
    P = random_convex_polygon(rng, int(rng.integers(3, 8)), radius=1.2)
    if not has_delta_property(P).holds:
        continue
    hits += 1
    rep = has_delta_s_property(difference_body(P))
    print(f"{len(P)}-gon with Delta -> D(P) symmetric property: {rep.holds} ({len(rep.rectangles)} rectangles)")

# %%
# The regular unit hexagon is the extremal centrally symmetric body: perimeter 6.
from strutgeo import regular_polygon

H = regular_polygon(6)
print("hexagon:", has_delta_s_property(H).holds, perimeter(H))
print("hexagon * 0.9:", has_delta_s_property(H.scale(0.9)).holds)
