# %% [markdown]
# Annealing searches for small perimeters
#
# Seeded simulated annealing over vertex positions, with the constraints in
# a penalty and a final repair.  The searches can only give one-sided
# evidence: they should never go below the proven bounds (3 and 6), and any
# candidate that does is re-checked at tighter tolerances before it is
# reported.  Set STRUTGEO_THREADS to spread restarts over processes.

# %%
from strutgeo import (
    SearchConfig,
    centsym_deficit_search,
    conjecture_search,
    minimize_delta_perimeter,
    regular_polygon,
)
from strutgeo.geom import aligned_hausdorff

ITERS = 40_000

# %%
for n in (3, 4, 5):
    rep = minimize_delta_perimeter(SearchConfig(seed=42, iterations=ITERS, n_vertices=n))
    print(f"Delta, n={n}: best {rep.best_value:.6f}, violations {len(rep.violations)}")
    if n == 3:
        print("   distance to the unit triangle:", aligned_hausdorff(rep.witness, regular_polygon(3)))

# %%
for n in (6, 8):
    rep = centsym_deficit_search(SearchConfig(seed=42, iterations=ITERS, n_vertices=n))
    print(f"centrally symmetric, n={n}: best {rep.best_value:.6f}, violations {len(rep.violations)}")

# %%
# Two strutted sides: proven bound 3.  Three strutted sides: open, evidence only.
for m, n in ((2, 5), (3, 6)):
    rep = conjecture_search(m, SearchConfig(seed=1, iterations=ITERS, n_vertices=n))
    print(f"m={m}, n={n}: best {rep.best_value:.6f}, violations {len(rep.violations)}")

# %%
# The trace records (iteration, penalized energy, feasible) about 200 times per run.
print(rep.trace[:3], "...", rep.trace[-1])
