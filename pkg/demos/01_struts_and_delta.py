# %% [markdown]
# Struts and the Delta property
#
# A side AB of a convex polygon P has an l-strut when some point C of P
# sits at distance l from both A and B.  P has the Delta property when
# every side has a unit strut.

# %%
import math

from strutgeo import ConvexPolygon, has_delta_property, regular_polygon, strut_apexes

# the two candidate apexes of a unit side: left one first (interior side for ccw order)
print(strut_apexes((0, 0), (1, 0)))

# %%
# A regular triangle with unit side is the tightest example: each apex is the opposite vertex.
tri = regular_polygon(3)
rep = has_delta_property(tri)
print("unit triangle:", rep.holds)
for c in rep.certificates:
    print(f"  side {c.side_index}: apex {c.apex}")

# %%
# Shrinking it by 10% breaks every side.
print("0.9 triangle failing sides:", has_delta_property(regular_polygon(3, side=0.9)).failing_sides)

# %%
# The strut length is a parameter; a side of length exactly 2l uses its own midpoint.
big = regular_polygon(3, side=2.0)
print("side 2, l=1:", has_delta_property(big, l=1.0).holds)

# %%
# Any vertex list is normalized: counterclockwise, lexicographically first vertex first.
P = ConvexPolygon([(1, 1), (0, 1), (0, 0), (1, 0)])
print(P.vertices, "perimeter", P.perimeter(), "area", P.area())
try:
    ConvexPolygon([(0, 0), (2, 0), (1, 0.3), (2, 2), (0, 2)])
except ValueError as exc:
    print("rejected:", exc)

# %%
# Perimeter of anything with the Delta property is at least 3; squares with unit side sit at 4.
for n in (3, 4, 5, 6):
    Q = regular_polygon(n)
    print(n, has_delta_property(Q).holds, round(Q.perimeter(), 6), ">= 3:", Q.perimeter() >= 3 - 1e-12)
print(math.isclose(regular_polygon(3).perimeter(), 3.0))
