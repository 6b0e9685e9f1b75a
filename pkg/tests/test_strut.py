import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strutgeo.constructions import regular_polygon, snub_triangle
from strutgeo.geom import ConvexPolygon, Tolerances, contains_point, difference_body, random_convex_polygon
from strutgeo.strut import (
    delta_deficit,
    delta_s_deficit,
    has_delta_property,
    has_delta_s_property,
    inscribed_rectangle,
    side_has_strut,
    strut_apexes,
    strut_deficit,
)


def test_apexes_equidistant():
    for C in strut_apexes((0, 0), (1.2, 0.3), 1.0):
        assert math.dist(C, (0, 0)) == pytest.approx(1.0)
        assert math.dist(C, (1.2, 0.3)) == pytest.approx(1.0)


def test_first_apex_is_left_of_side():
    left, right = strut_apexes((0, 0), (1, 0))
    assert left.y > 0 > right.y


def test_apex_tangent_and_too_long():
    assert strut_apexes((0, 0), (2, 0)) == [(1.0, 0.0)]
    assert strut_apexes((0, 0), (2.1, 0)) == []


def test_apex_errors():
    with pytest.raises(ValueError, match="coincident"):
        strut_apexes((1, 1), (1, 1))
    with pytest.raises(ValueError):
        strut_apexes((0, 0), (1, 0), l=0.0)


def test_unit_triangle_has_delta():
    rep = has_delta_property(regular_polygon(3))
    assert rep.holds and len(rep.certificates) == 3 and rep.failing_sides == []
    P = regular_polygon(3)
    for c in rep.certificates:
        A, B = P.side(c.side_index)
        assert math.dist(c.apex, A) == pytest.approx(1.0)
        assert contains_point(P, c.apex)


def test_small_triangle_fails():
    rep = has_delta_property(regular_polygon(3, side=0.9))
    assert not rep.holds and rep.failing_sides == [0, 1, 2]


def test_square_and_larger_regular_polygons():
    for n in (4, 5, 6, 8):
        assert has_delta_property(regular_polygon(n)).holds


def test_delta_needs_three_vertices():
    with pytest.raises(ValueError):
        has_delta_property(ConvexPolygon([(0, 0), (1, 0)]))


def test_side_index_checked():
    with pytest.raises(IndexError):
        side_has_strut(regular_polygon(3), 3)


def test_strut_length_parameter():
    P = regular_polygon(3, side=2.5)
    assert has_delta_property(P, l=2.5).holds
    assert not has_delta_property(P, l=1.0).holds
    # a side of length exactly 2l has the degenerate strut at its midpoint
    assert has_delta_property(regular_polygon(3, side=2.0), l=1.0).holds


def test_snub_triangle_fails_on_every_side():
    rep = has_delta_property(snub_triangle(0.3))
    assert not rep.holds
    assert rep.failing_sides == list(range(6))


def test_deficit_zero_iff_strut(rng):
    for _ in range(30):
        P = random_convex_polygon(rng, int(rng.integers(3, 8)), radius=float(rng.uniform(0.4, 1.5)))
        for i in range(len(P)):
            has = side_has_strut(P, i, tol=Tolerances(1e-12, 1e-12, 1e-12)) is not None
            assert (strut_deficit(P, i) <= 1e-12) == has
        assert (delta_deficit(P) <= 1e-12) == has_delta_property(P, tol=Tolerances(1e-12, 1e-12, 1e-12)).holds


def test_inscribed_rectangle_geometry():
    K, L, M, N = inscribed_rectangle((1.0, 0.0))
    for p in (K, L, M, N):
        assert math.hypot(*p) == pytest.approx(1.0)
    assert (L.x - K.x, L.y - K.y) == pytest.approx((1.0, 0.0))
    assert math.dist(L, M) == pytest.approx(math.sqrt(3))
    with pytest.raises(ValueError):
        inscribed_rectangle((2.5, 0))


def test_delta_s_regular_hexagon():
    H = regular_polygon(6)
    assert has_delta_s_property(H).holds
    assert delta_s_deficit(H) == pytest.approx(0.0, abs=1e-12)
    small = H.scale(0.9)
    assert not has_delta_s_property(small).holds
    assert delta_s_deficit(small) > 0


def test_delta_s_requires_origin_symmetry():
    with pytest.raises(ValueError):
        has_delta_s_property(regular_polygon(6).translate((0.1, 0)))
    with pytest.raises(ValueError):
        has_delta_s_property(regular_polygon(3))


def test_inscribed_polygons_have_delta_s(rng):
    # vertices on the unit circle: each rectangle's corners are vertices of an inscribed set
    for _ in range(10):
        h = int(rng.integers(2, 5))
        t = np.sort(rng.uniform(0, math.pi, h))
        v = np.column_stack([np.cos(t), np.sin(t)])
        P = ConvexPolygon(np.vstack([v, -v]))
        assert has_delta_s_property(P).holds


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_difference_body_of_delta_polygon_has_delta_s(seed):
    rng = np.random.default_rng(seed)
    P = random_convex_polygon(rng, int(rng.integers(3, 8)), radius=float(rng.uniform(0.8, 1.5)))
    if has_delta_property(P).holds:
        assert has_delta_s_property(difference_body(P)).holds
