"""
Seeded simulated-annealing searches for small-perimeter polygons under strut constraints.

Three objectives share one annealer:

* ``minimize_delta_perimeter``: every side has a unit strut (lower bound 3);
* ``centsym_deficit_search``: centrally symmetric polygons with the
  symmetric Delta property and sides no longer than 1 (lower bound 6);
* ``conjecture_search``: the first ``m`` consecutive sides have struts and
  total length at least 1 (conjectured lower bound 3).

The state is an ordered, strictly convex, counterclockwise vertex list.
Constraints enter the energy as an additive penalty; the best penalized
states are repaired into feasible ones at the end.  Every reported witness
and every candidate violation is re-checked with the public predicates.

Restarts are independent random streams keyed by ``(seed, restart)`` and
merged by minimum value with ties broken by restart index, so a report
does not depend on how many worker processes ran it.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from .geom import DEFAULT_TOL, ConvexPolygon, Tolerances, perimeter, regular_vertices
from .strut import has_delta_property, has_delta_s_property, side_has_strut

_MIN_TURN = 1e-8


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    iterations: int = 200_000
    restarts: int = 1
    n_vertices: int = 3
    cooling: Optional[float] = None
    penalty_weight: float = 20.0
    t_start: float = 1e-2
    t_end: float = 1e-9
    trace_points: int = 200

    def __post_init__(self):
        if self.iterations < 1 or self.restarts < 1:
            raise ValueError("iterations and restarts must be >= 1")
        if self.n_vertices < 3:
            raise ValueError("n_vertices must be >= 3")
        if self.cooling is not None and not 0 < self.cooling < 1:
            raise ValueError("cooling must lie in (0, 1)")
        if not self.penalty_weight > 0:
            raise ValueError("penalty_weight must be positive")

    def per_step_cooling(self) -> float:
        if self.cooling is not None:
            return self.cooling
        return (self.t_end / self.t_start) ** (1.0 / self.iterations)


@dataclass
class SearchReport:
    objective: str
    best_value: float
    witness: Optional[ConvexPolygon]
    feasible: bool
    trace: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    restart: int = 0
    bound: float = 3.0

    def to_dict(self):
        from .io import polygon_to_dict

        return {
            "objective": self.objective,
            "bound": self.bound,
            "best_value": self.best_value if self.feasible else None,
            "feasible": self.feasible,
            "witness": polygon_to_dict(self.witness) if self.witness is not None else None,
            "restart": self.restart,
            "violations": [polygon_to_dict(P) for P in self.violations],
            "trace": [list(t) for t in self.trace],
        }


# -- scalar kernels -----------------------------------------------------------

def _turns_ok(xs, ys) -> bool:
    """Strictly convex, counterclockwise, winding once."""
    n = len(xs)
    total = 0.0
    for i in range(n):
        h, j = i - 1, (i + 1) % n
        ax, ay = xs[i] - xs[h], ys[i] - ys[h]
        bx, by = xs[j] - xs[i], ys[j] - ys[i]
        cr = ax * by - ay * bx
        base = math.hypot(xs[j] - xs[h], ys[j] - ys[h])
        if cr <= _MIN_TURN * base or math.hypot(bx, by) <= _MIN_TURN:
            return False
        total += math.atan2(cr, ax * bx + ay * by)
    return abs(total - 2 * math.pi) < 1e-6


def _perimeter(xs, ys) -> float:
    n = len(xs)
    return sum(math.hypot(xs[(i + 1) % n] - xs[i], ys[(i + 1) % n] - ys[i]) for i in range(n))


def _outside(px, py, xs, ys) -> float:
    """Distance from ``(px, py)`` to a ccw convex polygon (0 inside)."""
    n = len(xs)
    for i in range(n):
        j = (i + 1) % n
        if (xs[j] - xs[i]) * (py - ys[i]) - (ys[j] - ys[i]) * (px - xs[i]) < 0:
            break
    else:
        return 0.0
    best = math.inf
    for i in range(n):
        j = (i + 1) % n
        ex, ey = xs[j] - xs[i], ys[j] - ys[i]
        wx, wy = px - xs[i], py - ys[i]
        t = (wx * ex + wy * ey) / (ex * ex + ey * ey)
        t = 0.0 if t < 0 else 1.0 if t > 1 else t
        dx, dy = wx - t * ex, wy - t * ey
        d = dx * dx + dy * dy
        if d < best:
            best = d
    return math.sqrt(best)


def _strut_gap(i, xs, ys) -> float:
    n = len(xs)
    j = (i + 1) % n
    ax, ay, bx, by = xs[i], ys[i], xs[j], ys[j]
    dx, dy = bx - ax, by - ay
    s = math.hypot(dx, dy)
    mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
    if s >= 2:
        return (s - 2) + _outside(mx, my, xs, ys)
    h = math.sqrt(1 - 0.25 * s * s)
    nx, ny = -dy / s * h, dx / s * h
    g = _outside(mx + nx, my + ny, xs, ys)
    if g == 0.0:
        return 0.0
    return min(g, _outside(mx - nx, my - ny, xs, ys))


def _rect_gap(i, xs, ys) -> float:
    n = len(xs)
    j = (i + 1) % n
    vx, vy = xs[j] - xs[i], ys[j] - ys[i]
    s = math.hypot(vx, vy)
    excess = 0.0
    if s > 2:
        excess = s - 2
        vx, vy, s = vx * 2 / s, vy * 2 / s, 2.0
    h = math.sqrt(max(0.0, 4 - s * s))
    nx, ny = -vy / s * 0.5 * h, vx / s * 0.5 * h
    hx, hy = 0.5 * vx, 0.5 * vy
    return excess + sum(_outside(px, py, xs, ys) for px, py in
                        ((-hx - nx, -hy - ny), (hx - nx, hy - ny), (hx + nx, hy + ny), (-hx + nx, -hy + ny)))


# -- objectives ---------------------------------------------------------------

@dataclass(frozen=True)
class _Objective:
    name: str
    bound: float
    n: int
    symmetric: bool
    deficit: Callable
    verify: Callable  # ConvexPolygon, Tolerances -> bool


def _delta_deficit(xs, ys):
    return sum(_strut_gap(i, xs, ys) for i in range(len(xs)))


def _centsym_deficit(xs, ys):
    n = len(xs)
    total = 0.0
    for i in range(n // 2):  # opposite sides are translates of each other
        j = (i + 1) % n
        s = math.hypot(xs[j] - xs[i], ys[j] - ys[i])
        total += 2 * (max(0.0, s - 1.0) + _rect_gap(i, xs, ys))
    return total


def _conjecture_deficit(m):
    def deficit(xs, ys):
        n = len(xs)
        total, length = 0.0, 0.0
        for i in range(m):
            j = (i + 1) % n
            length += math.hypot(xs[j] - xs[i], ys[j] - ys[i])
            total += _strut_gap(i, xs, ys)
        return total + max(0.0, 1.0 - length)
    return deficit


def _verify_delta(P: ConvexPolygon, n: int, tol: Tolerances) -> bool:
    return len(P) == n and has_delta_property(P, 1.0, tol).holds


def _verify_centsym(P: ConvexPolygon, n: int, tol: Tolerances) -> bool:
    if len(P) != n:
        return False
    if np.max(np.hypot(*P.edges().T)) > 1 + tol.eps_geom:
        return False
    try:
        return has_delta_s_property(P, tol).holds
    except ValueError:
        return False


def _verify_conjecture(m):
    def verify(P: ConvexPolygon, n: int, tol: Tolerances, labelled=None) -> bool:
        if len(P) != n or labelled is None:
            return False
        # the constrained sides are labelled by the search order, not the canonical one
        start = _canonical_offset(P, labelled)
        if start is None:
            return False
        sides = [(start + i) % n for i in range(m)]
        length = sum(math.dist(*P.side(i)) for i in sides)
        if length < 1 - tol.eps_geom:
            return False
        return all(side_has_strut(P, i, 1.0, tol) is not None for i in sides)
    return verify


def _canonical_offset(P: ConvexPolygon, pts) -> Optional[int]:
    """Index in ``P.vertices`` of the search-order vertex 0."""
    d = np.hypot(*(P.vertices - np.asarray(pts[0])).T)
    k = int(np.argmin(d))
    return k if d[k] <= 1e-9 else None


# -- annealer -----------------------------------------------------------------

def _full(state, symmetric):
    xs = [p[0] for p in state]
    ys = [p[1] for p in state]
    if symmetric:
        xs = xs + [-x for x in xs]
        ys = ys + [-y for y in ys]
    return xs, ys


def _initial_state(obj: _Objective, rng: np.random.Generator, start):
    if start is not None:
        v = np.asarray(start.vertices if isinstance(start, ConvexPolygon) else start, dtype=float)
        if obj.symmetric:
            v = v[: len(v) // 2]
        return [tuple(map(float, p)) for p in v]
    n = obj.n
    phase = rng.uniform(0, 2 * math.pi)
    if obj.symmetric:
        # circumradius slightly above 1 with short sides keeps the start near feasibility
        R = 1.05
        v = regular_vertices(n, R, phase)[: n // 2]
    else:
        side = 1.0 if n > 3 else 1.1
        R = side / (2 * math.sin(math.pi / n))
        v = regular_vertices(n, R, phase)
    v = v + rng.normal(scale=0.01, size=v.shape)
    return [tuple(map(float, p)) for p in v]


def _energy(obj, state, weight):
    xs, ys = _full(state, obj.symmetric)
    if not _turns_ok(xs, ys):
        return math.inf, math.inf, math.inf
    per = _perimeter(xs, ys)
    d = obj.deficit(xs, ys)
    return per + weight * d, per, d


def _polygon(obj, state) -> Optional[ConvexPolygon]:
    xs, ys = _full(state, obj.symmetric)
    try:
        P = ConvexPolygon(list(zip(xs, ys)))
    except ValueError:
        return None
    return P if len(P) == obj.n else None


def _verify(obj, state, tol) -> Optional[ConvexPolygon]:
    P = _polygon(obj, state)
    if P is None:
        return None
    xs, ys = _full(state, obj.symmetric)
    if obj.name.startswith("conjecture"):
        ok = obj.verify(P, obj.n, tol, labelled=list(zip(xs, ys)))
    else:
        ok = obj.verify(P, obj.n, tol)
    return P if ok else None


def _scale_repair(obj, state, tol):
    """Smallest up-scaling (about the centroid) that makes ``state`` feasible."""
    xs, ys = _full(state, obj.symmetric)
    if obj.symmetric:
        cx = cy = 0.0
    else:
        cx, cy = sum(xs) / len(xs), sum(ys) / len(ys)
    for s in np.concatenate([[1.0], 1 + np.geomspace(1e-10, 0.05, 80)]):
        cand = [(cx + s * (x - cx), cy + s * (y - cy)) for x, y in state]
        xs2, ys2 = _full(cand, obj.symmetric)
        if _turns_ok(xs2, ys2) and obj.deficit(xs2, ys2) <= tol.eps_contains:
            P = _verify(obj, cand, tol)
            if P is not None:
                return cand, P
    return None


def _inscribed_repair(obj, state, tol):
    # radial projection onto the unit circle with half-turn gaps capped at pi/3
    h = len(state)
    ang = np.sort(np.mod([math.atan2(s * y, s * x) for x, y in state for s in (1, -1)], 2 * math.pi))
    gaps = np.diff(np.concatenate([ang, [ang[0] + 2 * math.pi]]))[:h]
    if np.any(gaps <= 0) or abs(gaps.sum() - math.pi) > 1e-9:
        return None
    cap = math.pi / 3
    for _ in range(50):
        over = gaps > cap
        if not over.any():
            break
        excess = float((gaps[over] - cap).sum())
        gaps[over] = cap
        room = np.where(gaps < cap, cap - gaps, 0.0)
        if room.sum() <= 0:
            return None
        gaps = gaps + room * min(1.0, excess / room.sum())
    angles = ang[0] + np.concatenate([[0.0], np.cumsum(gaps[:-1])])
    cand = [(math.cos(t), math.sin(t)) for t in angles[:h]]
    P = _verify(obj, cand, tol)
    return (cand, P) if P is not None else None


def _anneal(obj: _Objective, cfg: SearchConfig, restart: int, start=None,
            tol: Tolerances = DEFAULT_TOL):
    rng = np.random.default_rng([cfg.seed, restart])
    state = _initial_state(obj, rng, start)
    k = len(state)
    iters = cfg.iterations
    moves = rng.integers(0, k, size=iters)
    noise = rng.standard_normal((iters, 2))
    coins = rng.random(iters)

    w = cfg.penalty_weight
    E, per, d = _energy(obj, state, w)
    cool = cfg.per_step_cooling()
    T = cfg.t_start
    sigma = 0.02
    accepted = 0
    window = 500
    trace_every = max(1, iters // cfg.trace_points)

    feas_tol = tol.eps_contains
    best_feas = (math.inf, None)
    if d <= feas_tol and math.isfinite(E):
        best_feas = (per, list(state))
    pool = [(E, list(state))]
    suspects = []
    trace = []

    for it in range(iters):
        i = moves[it]
        old = state[i]
        state[i] = (old[0] + sigma * noise[it, 0], old[1] + sigma * noise[it, 1])
        E2, per2, d2 = _energy(obj, state, w)
        if E2 <= E or (math.isfinite(E2) and coins[it] < math.exp((E - E2) / T)):
            E, per, d = E2, per2, d2
            accepted += 1
            if d <= feas_tol:
                if per < best_feas[0]:
                    best_feas = (per, list(state))
                if per < obj.bound - tol.eps_check:
                    suspects.append(list(state))
            if E < pool[0][0]:
                pool.insert(0, (E, list(state)))
                del pool[8:]
        else:
            state[i] = old
        if (it + 1) % window == 0:
            rate = accepted / window
            sigma = sigma * 1.25 if rate > 0.35 else sigma / 1.25 if rate < 0.15 else sigma
            sigma = min(max(sigma, 1e-9), 0.1)
            accepted = 0
        if it % trace_every == 0 or it == iters - 1:
            trace.append((it, E, bool(d <= feas_tol)))
        T *= cool

    candidates = []
    if best_feas[1] is not None:
        P = _verify(obj, best_feas[1], tol)
        if P is not None:
            candidates.append((perimeter(P), P, best_feas[1]))
    repairs = (_scale_repair, _inscribed_repair) if obj.symmetric else (_scale_repair,)
    for _, st in pool:
        for repair in repairs:
            fixed = repair(obj, st, tol)
            if fixed is not None:
                candidates.append((perimeter(fixed[1]), fixed[1], fixed[0]))

    # anything below the bound must survive a re-check at tightened tolerances
    strict = tol.tightened(10.0)
    violations = []
    for st in suspects + [c[2] for c in candidates]:
        P = _verify(obj, st, strict)
        if P is not None and perimeter(P) < obj.bound - tol.eps_check:
            violations.append(P)

    if candidates:
        val, P, _ = min(candidates, key=lambda c: c[0])
        return SearchReport(obj.name, val, P, True, trace, violations, restart, obj.bound)
    return SearchReport(obj.name, math.inf, None, False, trace, violations, restart, obj.bound)



def _workers() -> int:
    env = os.environ.get("STRUTGEO_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _merge(reports: list) -> SearchReport:
    feasible = [r for r in reports if r.feasible]
    pick = min(feasible, key=lambda r: (r.best_value, r.restart)) if feasible else reports[0]
    violations = [P for r in sorted(reports, key=lambda r: r.restart) for P in r.violations]
    return replace(pick, violations=violations)


def _run_restart(args):
    obj, cfg, restart, start, tol = args
    return _anneal(obj, cfg, restart, start, tol)


def _run(obj: _Objective, cfg: SearchConfig, start=None, tol: Tolerances = DEFAULT_TOL,
         workers: Optional[int] = None) -> SearchReport:
    jobs = [(obj, cfg, r, start, tol) for r in range(cfg.restarts)]
    workers = _workers() if workers is None else workers
    if workers > 1 and cfg.restarts > 1:
        with ProcessPoolExecutor(max_workers=min(workers, cfg.restarts)) as ex:
            reports = list(ex.map(_run_restart, jobs))
    else:
        reports = [_run_restart(j) for j in jobs]
    return _merge(reports)


def minimize_delta_perimeter(cfg: SearchConfig, start=None, tol: Tolerances = DEFAULT_TOL,
                             workers: Optional[int] = None) -> SearchReport:
    """Smallest perimeter found for ``n``-gons with the Delta property (bound: 3)."""
    obj = _Objective("min-delta", 3.0, cfg.n_vertices, False, _delta_deficit, _verify_delta)
    return _run(obj, cfg, start, tol, workers)


def centsym_deficit_search(cfg: SearchConfig, start=None, tol: Tolerances = DEFAULT_TOL,
                           workers: Optional[int] = None) -> SearchReport:
    """Smallest perimeter found for centrally symmetric ``n``-gons with the symmetric
    Delta property and all sides at most 1 (bound: 6)."""
    if cfg.n_vertices % 2 or cfg.n_vertices < 4:
        raise ValueError("centsym search needs an even number of vertices >= 4")
    obj = _Objective("centsym", 6.0, cfg.n_vertices, True, _centsym_deficit, _verify_centsym)
    return _run(obj, cfg, start, tol, workers)


def conjecture_search(m: int, cfg: SearchConfig, start=None, tol: Tolerances = DEFAULT_TOL,
                      workers: Optional[int] = None) -> SearchReport:
    """Smallest perimeter found when sides ``A1A2 .. AmAm+1`` have struts and total length >= 1.

    For ``m <= 2`` the bound 3 is a theorem; for larger ``m`` the result is evidence only.
    """
    if not 1 <= m <= cfg.n_vertices - 1:
        raise ValueError("m must satisfy 1 <= m <= n_vertices - 1")
    obj = _Objective(f"conjecture-m{m}", 3.0, cfg.n_vertices, False,
                     _conjecture_deficit(m), _verify_conjecture(m))
    return _run(obj, cfg, start, tol, workers)
