import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import Polynomial

from oracles import central_difference, real_roots
from strutgeo import pentagon as pg
from strutgeo.geom import perimeter
from strutgeo.roots import isolate_real_roots, roots_in

PI3, PI2 = math.pi / 3, math.pi / 2
angles = st.floats(PI3, PI2)


def test_params_validation():
    with pytest.raises(ValueError):
        pg.PentagonParams(-0.1, 1.0, 1.0)
    with pytest.raises(ValueError):
        pg.PentagonParams(1.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        pg.PentagonParams(1.0, 1.0, 1.7)


def test_substitution_round_trip():
    p = pg.PentagonParams(1.1, 1.3, 1.2)
    q = pg.PentagonParams.from_substitution(*p.substitution())
    assert q.as_tuple() == pytest.approx(p.as_tuple(), abs=1e-14)
    assert pg.PentagonParams(1.0, 1.0, PI2).substitution()[2] == math.inf


def test_omega_membership():
    assert pg.PentagonParams(PI3, PI3, PI3).in_omega()
    assert not pg.PentagonParams(PI2, PI2, PI3).in_omega()
    assert pg.PentagonParams(PI3, PI2, PI3).in_omega1()


def test_construction_distances():
    p = pg.PentagonParams(1.2, 1.1, 1.3)
    pts = pg.pentagon_points(p)
    d = lambda a, b: math.dist(pts[a], pts[b])
    assert d("B", "E") == pytest.approx(1.0)
    assert d("B", "F") == pytest.approx(1.0)
    assert d("A", "E") == pytest.approx(1.0)
    assert d("C", "F") == pytest.approx(1.0)
    assert d("E", "F") == pytest.approx(2 * math.sin(p.theta / 2))
    assert d("A", "F") ** 2 == pytest.approx(pg.strut_chord_f(p.alpha, p.gamma))


@settings(max_examples=200, deadline=None)
@given(angles, st.floats(0.05, PI2))
def test_chord_forms_agree(x, g):
    f = [pg.strut_chord_f(x, g, form=k) for k in (1, 2, 3, 4)]
    assert f == pytest.approx([f[0]] * 4, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(0, PI2), st.floats(0, PI2), st.floats(0.01, PI2))
def test_three_closed_forms_agree(a, b, g):
    A = pg.perimeter_A(a, b, g)
    assert pg.perimeter_B(a, b, math.pi - 2 * g) == pytest.approx(A, abs=1e-12)
    # cos loses the angle near 0, so compare C against A at the recovered angles
    u, v = math.cos(a), math.cos(b)
    assert pg.perimeter_C(u, v, g) == pytest.approx(pg.perimeter_A(math.acos(u), math.acos(v), g), abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(angles, angles, angles)
def test_closed_form_matches_geometry(a, b, g):
    p = pg.PentagonParams(a, b, g)
    if pg.in_convex_position(p):
        assert perimeter(pg.build_pentagon(p)) == pytest.approx(pg.perimeter_closed_form(p), abs=1e-9)


def test_named_perimeter_values():
    assert pg.perimeter_A(PI3, PI3, PI3) == pytest.approx(3.0)
    q = pg.ARCCOS_QUARTER
    assert pg.perimeter_A(q, q, q) == pytest.approx(3.0)
    for form in pg.Form:
        assert pg.perimeter_closed_form(pg.PentagonParams(q, q, q), form) == pytest.approx(3.0)


def test_gradient_matches_finite_differences(rng):
    for _ in range(30):
        q = rng.uniform(PI3 + 0.02, PI2 - 0.02, 3)
        grad = pg.gradient_closed_form(pg.PentagonParams(*q))
        fd = central_difference(lambda x: pg.perimeter_A(*x), q)
        assert grad == pytest.approx(fd, abs=1e-7)


def test_stationarity_function_values():
    assert pg.stationarity_D(5 * math.pi / 12, PI3) == pytest.approx(0.0, abs=1e-12)
    for a in (0.3, 0.9, 1.4):
        assert pg.stationarity_D(a, 0.0) == pytest.approx(-math.sin(a), abs=1e-12)


def test_stationarity_is_derivative_numerator(rng):
    # dB/dalpha (beta = alpha) equals 2 D / sqrt(f) along the diagonal
    for _ in range(10):
        a, th = rng.uniform(PI3, 5 * math.pi / 12), rng.uniform(0.5, 1.2)
        h = 1e-6
        num = (pg.perimeter_B(a + h, 1.0, th) - pg.perimeter_B(a - h, 1.0, th)) / (2 * h)
        f = 3 + 2 * math.cos(2 * a) - 2 * math.cos(th) - 2 * math.cos(2 * a - th)
        assert num == pytest.approx(2 * pg.stationarity_D(a, th) / math.sqrt(f), abs=1e-7)


def test_g_curve_endpoints_and_zero_set():
    assert pg.g_curve(PI3) == pytest.approx(PI3, abs=1e-12)
    assert pg.g_curve(5 * math.pi / 12) == pytest.approx(PI3, abs=1e-12)
    for a in np.linspace(PI3, 5 * math.pi / 12, 25):
        assert pg.stationarity_D(a, pg.g_curve(a)) == pytest.approx(0.0, abs=1e-12)


def test_g_curve_domain():
    with pytest.raises(ValueError):
        pg.g_curve(1.4)
    with pytest.raises(ValueError, match="real domain"):
        pg.g_curve(0.6)


def test_extremal_constants():
    k = pg.extremal_constants()
    assert k.theta0 == pytest.approx(0.9630621725, abs=1e-8)
    assert k.alpha0 == pytest.approx(1.159593548, abs=1e-8)
    assert k.alpha_argmin == pytest.approx(k.alpha0, abs=1e-6)
    assert math.atan(k.tan_theta0_radical) == pytest.approx(k.theta0, abs=1e-9)
    assert pg.g_curve(k.alpha0) == pytest.approx(k.theta0, abs=1e-12)


def test_golden_section_min():
    x, fx = pg.golden_section_min(lambda t: (t - 0.3) ** 2 + 1, 0, 1)
    assert x == pytest.approx(0.3, abs=1e-6) and fx == pytest.approx(1.0)


def test_diagonal_profile_stays_above_three():
    vals = pg.diagonal_profile(np.linspace(PI3, 5 * math.pi / 12, 9))
    assert vals.min() > 3.0


def test_quartic_roots_against_numpy():
    ours = sorted(pg.z1_quartic_roots())
    assert ours == pytest.approx(real_roots(pg.Z1_QUARTIC), abs=1e-10)
    assert ours == pytest.approx([-0.1024023606, 0.2263621549, 1.0, 2.876040206], abs=1e-8)


def test_v3_root_in_interval():
    roots = pg.v3_roots()
    assert roots == pytest.approx([1 / math.sqrt(3)], abs=1e-10)
    lo, hi = 1 / math.sqrt(3), math.sqrt(3 / 5)
    assert roots == pytest.approx(real_roots(pg.V3, lo - 1e-9, hi + 1e-9), abs=1e-10)


def test_case1_points():
    cps = pg.case1_critical_points()
    assert sorted(c.perimeter for c in cps) == pytest.approx([3.0, 3.002605955], abs=1e-8)
    for c in cps:
        x, y, _ = c.substitution
        assert x == pytest.approx(math.sqrt(3 / 5)) and y == pytest.approx(x)
        assert math.cos(c.params.alpha) + math.cos(c.params.beta) == pytest.approx(0.5)


def test_case2_points():
    cps = pg.case2_critical_points()
    asym = sorted((c for c in cps if abs(c.substitution[0] - c.substitution[1]) > 1e-6),
                  key=lambda c: c.substitution[0])
    assert len(asym) == 2
    a, b = asym
    assert a.substitution[:2] == pytest.approx(b.substitution[1::-1], abs=1e-10)
    assert a.substitution[0] == pytest.approx(0.6289625043, abs=1e-9)
    assert a.substitution[2] == pytest.approx(2.2428074, abs=1e-6)
    for c in asym:
        assert c.perimeter == pytest.approx(3.008459178, abs=1e-7)
        assert abs(c.residuals["U3"]) < 1e-9
        assert abs(c.residuals["U4"]) < 1e-9
        assert max(abs(c.residuals["lagrange_gamma"]), abs(c.residuals["lagrange_alpha_beta"])) < 1e-7
    for c in cps:
        assert c.to_dict()["kind"] == "case2_boundary_omega1"


def test_minimum_over_omega():
    res = pg.verify_min_over_omega()
    assert res.min_perimeter == pytest.approx(3.0, abs=1e-6)
    assert res.minimizers and all(pat in pg.EQUALITY_PATTERNS for _, _, pat in res.minimizers)
    assert res.argmin.in_omega(1e-9)


@pytest.mark.parametrize("params,name", [
    ((PI3, PI3, PI3), "regular_triangle"),
    ((PI3, PI2, PI3), "triangle_B_eq_C"),
    ((PI2, PI3, PI3), "triangle_B_eq_A"),
    ((pg.ARCCOS_QUARTER,) * 3, "special_pentagon"),
    ((math.acos(0.2), math.acos(0.3), PI2), "quadrangle_E_eq_F"),
])
def test_equality_patterns_have_perimeter_three(params, name):
    p = pg.PentagonParams(*params)
    assert pg.equality_pattern(p) == name
    assert pg.perimeter_closed_form(p) == pytest.approx(3.0, abs=1e-12)


def test_interior_point_has_no_pattern():
    assert pg.equality_pattern(pg.PentagonParams(1.2, 1.2, 1.2)) is None


def test_isolate_real_roots_simple():
    p = Polynomial.fromroots([-2.5, 0.1, 3.0])
    assert isolate_real_roots(p) == pytest.approx([-2.5, 0.1, 3.0], abs=1e-11)
    assert roots_in([-2.5, 0.1, 3.0], 0, 1) == [0.1]


def test_isolate_real_roots_exact_grid_zero():
    assert isolate_real_roots(Polynomial([0, 1])) == pytest.approx([0.0], abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-9, 9), min_size=1, max_size=4, unique=True))
def test_isolate_real_roots_matches_numpy(rs):
    rs = sorted(rs)
    if len(rs) > 1 and min(np.diff(rs)) < 0.01:
        return
    p = Polynomial.fromroots(rs)
    assert isolate_real_roots(p) == pytest.approx(rs, abs=1e-8)


def test_isolate_real_roots_subnormal_root():
    # the product of a subnormal and a small value underflows to zero
    assert isolate_real_roots(Polynomial.fromroots([5e-324])) == pytest.approx([0.0], abs=1e-11)
