"""
Executable acceptance suite: one function per criterion, each returning named checks.

Both the ``verify-all`` command and the test suite call into this module,
so the numbers in the printed table are exactly the ones the tests assert.

A tolerance profile may cap the comparison tolerances: with a profile the
effective tolerance of every numeric check is ``min(stated, eps_check)``
and the strut predicates run with the profile's tolerances.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import constructions as cons
from . import pentagon as pg
from .geom import (
    DEFAULT_TOL,
    ConvexPolygon,
    Tolerances,
    convex_hull,
    difference_body,
    hausdorff_distance,
    perimeter,
    random_convex_polygon,
    same_polygon,
    symmetry_center,
)
from .strut import has_delta_property, has_delta_s_property


@dataclass(frozen=True)
class Check:
    name: str
    measured: object
    expected: object
    tol: Optional[float]
    passed: bool

    def to_dict(self):
        return {"name": self.name, "measured": self.measured, "expected": self.expected,
                "tol": self.tol, "passed": bool(self.passed)}


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "seconds": self.seconds, "checks": [c.to_dict() for c in self.checks]}


@dataclass(frozen=True)
class Profile:
    """Tolerances for a suite run; ``cap`` limits every stated comparison tolerance."""

    tol: Tolerances = DEFAULT_TOL
    cap: Optional[float] = None

    def eff(self, stated: float) -> float:
        return stated if self.cap is None else min(stated, self.cap)


DEFAULT_PROFILE = Profile()


def load_profile(path) -> Profile:
    """Read ``{"eps_geom": .., "eps_contains": .., "eps_check": ..}``; missing keys keep defaults.

    Smaller keys are clamped to ``eps_check`` so the ordering invariant holds.
    """
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("tolerance profile must be a JSON object")
    vals = {k: float(doc.get(k, getattr(DEFAULT_TOL, k)))
            for k in ("eps_geom", "eps_contains", "eps_check")}
    vals["eps_contains"] = min(vals["eps_contains"], vals["eps_check"])
    vals["eps_geom"] = min(vals["eps_geom"], vals["eps_contains"])
    tol = Tolerances(**vals)
    return Profile(tol, tol.eps_check)


class _Recorder:
    def __init__(self, prof: Profile):
        self.prof = prof
        self.checks: list[Check] = []

    def close(self, name, measured, expected, tol):
        t = self.prof.eff(tol)
        ok = bool(np.isfinite(measured)) and abs(float(measured) - float(expected)) <= t
        self.checks.append(Check(name, float(measured), float(expected), t, ok))

    def at_most(self, name, measured, bound):
        t = self.prof.eff(bound)
        self.checks.append(Check(name, float(measured), 0.0, t, bool(float(measured) <= t)))

    def at_least(self, name, measured, bound, tol):
        t = self.prof.eff(tol)
        m = float(measured)
        self.checks.append(Check(name, m, float(bound), t, bool(math.isfinite(m) and m >= bound - t)))

    def holds(self, name, value, expected=True):
        self.checks.append(Check(name, bool(value), bool(expected), None, bool(value) == bool(expected)))

    def runtime(self, seconds, budget):
        self.checks.append(Check("runtime_s", round(seconds, 3), budget, None, seconds < budget))


# -- criteria -----------------------------------------------------------------

def criterion_1(prof: Profile = DEFAULT_PROFILE) -> list[Check]:
    """Three perimeter closed forms agree; they match the built pentagon in convex position."""
    r = _Recorder(prof)
    t0 = time.perf_counter()
    s = np.linspace(0.0, pg.PI2, 50)
    a, b, g = np.meshgrid(s, s, np.linspace(pg.PI2 / 50, pg.PI2, 50), indexing="ij")
    A = pg.perimeter_A(a, b, g)
    B = pg.perimeter_B(a, b, np.pi - 2 * g)
    C = pg.perimeter_C(np.cos(a), np.cos(b), g)
    r.at_most("max|A-B| on 50^3 grid", np.max(np.abs(A - B)), 1e-12)
    r.at_most("max|A-C| on 50^3 grid", np.max(np.abs(A - C)), 1e-12)

    worst, count = 0.0, 0
    for idx in np.ndindex(a.shape):
        p = pg.PentagonParams(a[idx], b[idx], g[idx])
        if not pg.in_convex_position(p):
            continue
        count += 1
        worst = max(worst, abs(perimeter(pg.build_pentagon(p)) - A[idx]))
    r.holds("grid has convex-position samples", count > 0)
    r.at_most(f"max|geometric - closed form| over {count} convex samples", worst, 1e-7)
    r.runtime(time.perf_counter() - t0, 10.0)
    return r.checks


def criterion_2(prof: Profile = DEFAULT_PROFILE) -> list[Check]:
    """Extremal constants and the zero curve of the stationarity function."""
    r = _Recorder(prof)
    t0 = time.perf_counter()
    k = pg.extremal_constants()
    r.close("theta0", k.theta0, 0.9630621725, 1e-8)
    r.close("alpha0 (closed form)", k.alpha0, 1.159593548, 1e-8)
    r.close("argmin of g", k.alpha_argmin, 1.159593548, 1e-6)
    r.close("arctan of the tan(theta0) radical", math.atan(k.tan_theta0_radical), k.theta0, 1e-9)
    r.close("g(0)", pg.g_curve(0.0), pg.PI3, 1e-9)
    r.close("g(5pi/12)", pg.g_curve(5 * math.pi / 12), pg.PI3, 1e-9)
    r.close("g(pi/3)", pg.g_curve(pg.PI3), pg.PI3, 1e-9)
    alphas = np.linspace(pg.PI3, 5 * math.pi / 12, 50)
    res = max(abs(pg.stationarity_D(x, pg.g_curve(x))) for x in alphas)
    r.at_most("max|D(alpha, g(alpha))| on 50 points", res, 1e-9)
    r.runtime(time.perf_counter() - t0, 5.0)
    return r.checks


CASE2_EXPECTED = (0.6289625043, 0.9351779532, 2.242807541)


def criterion_3(prof: Profile = DEFAULT_PROFILE) -> list[Check]:
    """Quartic roots, case-1 and case-2 critical points with their residuals."""
    r = _Recorder(prof)
    t0 = time.perf_counter()
    roots = sorted(pg.z1_quartic_roots())
    expected = [-0.1024023606, 0.2263621549, 1.0, 2.876040206]
    r.holds("quartic has 4 real roots", len(roots) == 4)
    for got, want in zip(roots, expected):
        r.close(f"quartic root {want}", got, want, 1e-8)

    per1 = sorted(c.perimeter for c in pg.case1_critical_points())
    r.holds("two case-1 critical points", len(per1) == 2)
    for got, want in zip(per1, [3.0, 3.002605955]):
        r.close(f"case-1 perimeter {want}", got, want, 1e-8)

    cps = pg.case2_critical_points()
    asym = [c for c in cps if abs(c.substitution[0] - c.substitution[1]) > 1e-6]
    r.holds("two asymmetric case-2 solutions", len(asym) == 2)
    x0, y0, z0 = CASE2_EXPECTED
    for want in ((x0, y0, z0), (y0, x0, z0)):
        hit = min(asym, key=lambda c: abs(c.substitution[0] - want[0]), default=None)
        if hit is None:
            r.holds(f"case-2 solution near x={want[0]}", False)
            continue
        x, y, z = hit.substitution
        r.close(f"case-2 x (x={want[0]:.4f})", x, want[0], 1e-9)
        r.close(f"case-2 y (x={want[0]:.4f})", y, want[1], 1e-9)
        # printed z digits differ from the solution at the 1e-7 level
        r.close(f"case-2 z (x={want[0]:.4f})", z, want[2], 1e-6)
        r.close(f"case-2 perimeter (x={want[0]:.4f})", hit.perimeter, 3.008459178, 1e-7)
        r.close(f"U3 (x={want[0]:.4f})", hit.residuals["U3"], 0.0, 1e-9)
        lag = max(abs(hit.residuals["lagrange_gamma"]), abs(hit.residuals["lagrange_alpha_beta"]))
        r.at_most(f"stationarity residual (x={want[0]:.4f})", lag, 1e-7)
    r.runtime(time.perf_counter() - t0, 30.0)
    return r.checks


def criterion_4(prof: Profile = DEFAULT_PROFILE) -> list[Check]:
    """Minimum of the pentagon perimeter over the feasible set and its equality patterns."""
    r = _Recorder(prof)
    t0 = time.perf_counter()
    res = pg.verify_min_over_omega()
    r.close("min perimeter over feasible set", res.min_perimeter, 3.0, 1e-6)
    unmatched = [p for p, _, pat in res.minimizers if pat is None]
    r.holds(f"all {len(res.minimizers)} refined minimizers match an equality pattern",
            not unmatched and res.minimizers)
    r.runtime(time.perf_counter() - t0, 60.0)
    return r.checks


def criterion_5(prof: Profile = DEFAULT_PROFILE) -> list[Check]:
    """Special pentagon: perimeter, diagonal, concyclicity and integrality after scaling."""
    r = _Recorder(prof)
    P = cons.special_pentagon()
    pts = pg.pentagon_points(pg.PentagonParams(pg.ARCCOS_QUARTER, pg.ARCCOS_QUARTER, pg.ARCCOS_QUARTER))
    r.close("perimeter", perimeter(P), 3.0, 1e-9)
    r.close("|AC|", float(np.hypot(*(pts["A"] - pts["C"]))), 7 / 8, 1e-9)
    r.at_most("concyclic residual", cons.circumcircle_residual(P), 1e-9)
    d = cons.pairwise_distances(cons.integer_pentagon())
    r.holds("ten pairwise distances", len(d) == 10)
    r.at_most("max distance to nearest integer (scale 8)", float(np.max(np.abs(d - np.round(d)))), 1e-7)
    return r.checks


def _hull_of_sums(P: ConvexPolygon) -> ConvexPolygon:
    v = P.vertices
    return convex_hull((v[:, None, :] - v[None, :, :]).reshape(-1, 2))


def _has_parallel_sides(P: ConvexPolygon, tol: float = 1e-6) -> bool:
    e = P.edges()
    ang = np.mod(np.arctan2(e[:, 1], e[:, 0]), np.pi)
    diff = np.abs(np.subtract.outer(ang, ang))
    diff = np.minimum(diff, np.pi - diff) + np.eye(len(ang)) * np.pi
    return bool(np.min(diff) < tol)


def criterion_6(prof: Profile = DEFAULT_PROFILE, n_polygons: int = 100, seed: int = 6) -> list[Check]:
    """Difference-body laws on seeded random convex polygons."""
    r = _Recorder(prof)
    rng = np.random.default_rng(seed)
    per_err = center_err = 0.0
    oracle_ok = True
    delta_cases = delta_s_ok = 0
    for _ in range(n_polygons):
        n = int(rng.integers(3, 10))
        P = random_convex_polygon(rng, n, radius=float(rng.uniform(0.5, 1.5)))
        D = difference_body(P)
        per_err = max(per_err, abs(perimeter(D) - 2 * perimeter(P)))
        c = symmetry_center(D, prof.tol.eps_check)
        center_err = max(center_err, math.inf if c is None else math.hypot(*c))
        oracle_ok &= same_polygon(D, _hull_of_sums(P), prof.eff(1e-9))
        if has_delta_property(P, 1.0, prof.tol).holds and not _has_parallel_sides(P):
            delta_cases += 1
            delta_s_ok += has_delta_s_property(D, prof.tol).holds
    r.at_most("max|L(D(P)) - 2 L(P)|", per_err, 1e-9)
    r.at_most("max|symmetry center of D(P)|", center_err, 1e-9)
    r.holds("D(P) equals hull of pairwise differences", oracle_ok)
    r.holds(f"Delta polygons sampled ({delta_cases})", delta_cases > 0)
    r.holds(f"D(P) has the symmetric property ({delta_s_ok}/{delta_cases})", delta_s_ok == delta_cases)
    return r.checks


def criterion_7(prof: Profile = DEFAULT_PROFILE) -> list[Check]:
    """Construction fixtures: narrow isosceles, fan polygons, snub triangles."""
    r = _Recorder(prof)
    tol = prof.tol
    for a, want in ((0.2, True), (0.5, True), (math.pi / 3, True),
                    (math.pi / 3 + 0.05, False), (1.2, False)):
        r.holds(f"narrow_isosceles({a:.4f}) Delta", has_delta_property(cons.narrow_isosceles(a), 1.0, tol).holds,
                want)
    for n, eps, alpha in ((4, 0.01, 0.005), (7, 0.05, 0.01), (10, 1e-3, 1e-4)):
        F = cons.fan_ngon(n, eps, alpha)
        r.holds(f"fan_ngon({n}, {eps}, {alpha}) Delta", has_delta_property(F, 1.0, tol).holds)
        r.close(f"fan_ngon({n}) perimeter", perimeter(F), cons.fan_perimeter(n, eps, alpha), 1e-9)
    hexagon = cons.regular_polygon(6)
    for a in (0.0, 0.2, 0.5):
        S = cons.snub_triangle(a)
        r.at_most(f"snub({a}) Hausdorff(D(P), unit hexagon)",
                  hausdorff_distance(difference_body(S), hexagon), 1e-9)
        if a > 0:
            r.holds(f"snub({a}) Delta", has_delta_property(S, 1.0, tol).holds, False)
    return r.checks


SEARCH_ITERATIONS = 200_000


def criterion_8(prof: Profile = DEFAULT_PROFILE, iterations: int = SEARCH_ITERATIONS,
                seed: int = 42) -> list[Check]:
    """One-sided search evidence for the perimeter bounds, with a determinism re-run."""
    from .io import dumps
    from .search import SearchConfig, centsym_deficit_search, conjecture_search, minimize_delta_perimeter

    r = _Recorder(prof)
    t0 = time.perf_counter()
    runs: list[tuple[str, Callable, float]] = []
    for n in (3, 4, 5):
        runs.append((f"min-delta n={n}", lambda n=n: minimize_delta_perimeter(
            SearchConfig(seed=seed, iterations=iterations, n_vertices=n), tol=prof.tol), 3.0))
    for n in (6, 8):
        runs.append((f"centsym n={n}", lambda n=n: centsym_deficit_search(
            SearchConfig(seed=seed, iterations=iterations, n_vertices=n), tol=prof.tol), 6.0))
    runs.append(("conjecture m=2 n=5", lambda: conjecture_search(
        2, SearchConfig(seed=seed, iterations=iterations, n_vertices=5), tol=prof.tol), 3.0))
    first = None
    for name, run, bound in runs:
        rep = run()
        first = first or (run, rep)
        r.holds(f"{name} feasible witness", rep.feasible)
        r.at_least(f"{name} best value", rep.best_value, bound, 1e-3)
        r.holds(f"{name} verified violations ({len(rep.violations)})", not rep.violations)
    again = first[0]()
    r.holds("re-run with the same seed is identical",
            dumps(again.to_dict()) == dumps(first[1].to_dict()))
    r.runtime(time.perf_counter() - t0, 300.0)
    return r.checks


def criterion_9(prof: Profile = DEFAULT_PROFILE, n_points: int = 50, seed: int = 9) -> list[Check]:
    """Closed-form gradient against central finite differences inside the feasible set."""
    r = _Recorder(prof)
    rng = np.random.default_rng(seed)
    h = 1e-6
    worst = 0.0
    got = 0
    while got < n_points:
        q = rng.uniform(pg.PI3 + 0.01, pg.PI2 - 0.01, size=3)
        if math.cos(q[0]) + math.cos(q[1]) < 0.5 + 0.01:
            continue
        got += 1
        grad = pg.gradient_closed_form(pg.PentagonParams(*q))
        for k in range(3):
            e = np.zeros(3)
            e[k] = h
            fd = (pg.perimeter_A(*(q + e)) - pg.perimeter_A(*(q - e))) / (2 * h)
            worst = max(worst, abs(grad[k] - fd))
    r.at_most(f"max|gradient - central difference| at {n_points} points", worst, 1e-6)
    return r.checks


CRITERIA = {
    1: ("closed-form perimeter agreement", criterion_1),
    2: ("extremal constants", criterion_2),
    3: ("critical-point catalogue", criterion_3),
    4: ("minimum over the feasible set", criterion_4),
    5: ("special and integer pentagon", criterion_5),
    6: ("difference-body laws", criterion_6),
    7: ("construction fixtures", criterion_7),
    8: ("search evidence", criterion_8),
    9: ("gradient correctness", criterion_9),
}


def run_criterion(number: int, prof: Profile = DEFAULT_PROFILE) -> CriterionResult:
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    try:
        checks = fn(prof)
    except Exception as exc:  # a crash is a failed criterion, not a crashed suite
        checks = [Check(f"raised {type(exc).__name__}: {exc}", None, None, None, False)]
    return CriterionResult(number, title, checks, time.perf_counter() - t0)


def run_all(prof: Profile = DEFAULT_PROFILE, only=None) -> list[CriterionResult]:
    numbers = sorted(CRITERIA) if not only else sorted(set(only))
    return [run_criterion(k, prof) for k in numbers]


def format_table(results) -> str:
    lines = []
    for res in results:
        lines.append(f"[{'PASS' if res.passed else 'FAIL'}] criterion {res.number}: {res.title} "
                     f"({res.seconds:.2f} s)")
        for c in res.checks:
            mark = "ok  " if c.passed else "FAIL"
            tol = "" if c.tol is None else f"  tol={c.tol:.1e}"
            lines.append(f"    {mark} {c.name}: measured={_fmt(c.measured)} expected={_fmt(c.expected)}{tol}")
    return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)
