# %% [markdown]
# Construction gallery
#
# Closed-form families used as fixtures: narrow isosceles triangles, fan
# polygons whose perimeter approaches 3, snub triangles whose difference
# body is the unit hexagon, and the special pentagon with integer
# distances after scaling by 8.  Each is drawn to an SVG file.

# %%
import math
from pathlib import Path

import numpy as np

from strutgeo import difference_body, has_delta_property, perimeter, regular_polygon
from strutgeo.constructions import (
    fan_ngon,
    fan_perimeter,
    integer_pentagon,
    narrow_isosceles,
    pairwise_distances,
    snub_triangle,
    special_pentagon,
)
from strutgeo.geom import hausdorff_distance
from strutgeo.io import write_svg

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)


def draw(name, P):
    rep = has_delta_property(P)
    struts = [(*P.side(c.side_index), c.apex) for c in rep.certificates]
    write_svg(P, out / f"{name}.svg", struts)
    print(f"{name}: {len(P)} vertices, perimeter {perimeter(P):.9f}, Delta {rep.holds}")


# %%
for a in (0.5, math.pi / 3, 1.2):
    draw(f"isosceles_{a:.3f}", narrow_isosceles(a))

# %%
for n in (4, 7, 10):
    F = fan_ngon(n, 0.02, 0.01)
    draw(f"fan_{n}", F)
    print("   formula", fan_perimeter(n, 0.02, 0.01))

# %%
for a in (0.0, 0.2, 0.5):
    S = snub_triangle(a)
    draw(f"snub_{a}", S)
    print("   Hausdorff(D(P), unit hexagon) =", hausdorff_distance(difference_body(S), regular_polygon(6)))

# %%
draw("special_pentagon", special_pentagon())
print("scaled distances:", np.sort(np.round(pairwise_distances(integer_pentagon()), 9)))
print("SVG files in", out)
