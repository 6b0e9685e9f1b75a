import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_perimeter, dense_hausdorff, minkowski_oracle, ray_cast_inside, same_vertex_set
from strutgeo.geom import (
    ConvexPolygon,
    Tolerances,
    aligned_hausdorff,
    central_symmetral,
    contains_point,
    convex_hull,
    difference_body,
    distance_to_polygon,
    hausdorff_distance,
    minkowski_sum,
    perimeter,
    random_convex_polygon,
    reflect,
    regular_vertices,
    same_polygon,
    signed_area,
    symmetry_center,
)

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_canonical_order_from_clockwise_input():
    P = ConvexPolygon(SQUARE[::-1])
    assert np.array_equal(P.vertices, np.array(SQUARE, dtype=float))
    assert signed_area(P) == pytest.approx(1.0)


def test_rotated_start_gives_same_canonical_polygon():
    assert ConvexPolygon(SQUARE) == ConvexPolygon(SQUARE[2:] + SQUARE[:2])


def test_collinear_and_duplicate_vertices_removed():
    P = ConvexPolygon([(0, 0), (0.5, 0), (1, 0), (1, 1), (1, 1), (0, 1)])
    assert len(P) == 4


def test_reflex_vertex_rejected():
    with pytest.raises(ValueError, match="convex"):
        ConvexPolygon([(0, 0), (2, 0), (1, 0.3), (2, 2), (0, 2)])


def test_vertices_are_read_only():
    P = ConvexPolygon(SQUARE)
    with pytest.raises(ValueError):
        P.vertices[0, 0] = 5.0


def test_hull_of_interior_points():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (0.5, 1.5)]
    assert len(convex_hull(pts)) == 4


def test_hull_empty_raises():
    with pytest.raises(ValueError, match="empty"):
        convex_hull(np.zeros((0, 2)))


def test_degenerate_hulls():
    assert len(convex_hull([(1, 1), (1, 1)])) == 1
    seg = convex_hull([(0, 0), (1, 0), (3, 0)])
    assert len(seg) == 2
    assert perimeter(seg) == pytest.approx(6.0)


def test_perimeter_matches_brute_force(rng):
    for _ in range(20):
        P = random_convex_polygon(rng, int(rng.integers(3, 12)))
        assert perimeter(P) == pytest.approx(brute_perimeter(P.vertices), abs=1e-12)


def test_contains_point_boundary_and_slack():
    P = ConvexPolygon(SQUARE)
    assert contains_point(P, (0.5, 0.0))
    assert contains_point(P, (1.0, 1.0))
    assert contains_point(P, (0.5, -5e-10))
    assert not contains_point(P, (0.5, -1e-6))
    assert not contains_point(P, (0.5, -5e-10), tol=1e-12)


def test_contains_agrees_with_ray_casting(rng):
    P = random_convex_polygon(rng, 7)
    lo, hi = P.vertices.min(axis=0), P.vertices.max(axis=0)
    for q in rng.uniform(lo, hi, size=(500, 2)):
        if distance_to_polygon(P, q) > 1e-6 or ray_cast_inside(P.vertices, q):
            assert contains_point(P, q) == ray_cast_inside(P.vertices, q)


def test_distance_to_polygon():
    P = ConvexPolygon(SQUARE)
    assert distance_to_polygon(P, (0.5, 0.5)) == 0.0
    assert distance_to_polygon(P, (2, 1)) == pytest.approx(1.0)
    assert distance_to_polygon(P, (2, 2)) == pytest.approx(math.sqrt(2))


def test_minkowski_matches_oracle(rng):
    for _ in range(30):
        P = random_convex_polygon(rng, int(rng.integers(3, 9)))
        Q = random_convex_polygon(rng, int(rng.integers(3, 9)))
        S = minkowski_sum(P, Q)
        assert same_vertex_set(S.vertices, minkowski_oracle(P, Q), 1e-9)
        assert perimeter(S) == pytest.approx(perimeter(P) + perimeter(Q), abs=1e-9)


def test_minkowski_parallel_edges_merge():
    S = minkowski_sum(ConvexPolygon(SQUARE), ConvexPolygon(SQUARE))
    assert same_polygon(S, ConvexPolygon([(0, 0), (2, 0), (2, 2), (0, 2)]))


def test_minkowski_with_point_translates():
    P = ConvexPolygon(SQUARE)
    S = minkowski_sum(P, convex_hull([(3, 4)]))
    assert same_polygon(S, P.translate((3, 4)))


def test_reflection_is_involution(rng):
    P = random_convex_polygon(rng, 6)
    assert same_polygon(reflect(reflect(P)), P, 0.0)


def test_difference_body_laws(rng):
    for _ in range(20):
        P = random_convex_polygon(rng, int(rng.integers(3, 9)))
        D = difference_body(P)
        assert perimeter(D) == pytest.approx(2 * perimeter(P), abs=1e-9)
        c = symmetry_center(D)
        assert c is not None and math.hypot(*c) < 1e-9
        assert same_polygon(difference_body(P.translate((5, -3))), D, 1e-9)
        assert perimeter(central_symmetral(P)) == pytest.approx(perimeter(P), abs=1e-9)


def test_symmetry_center():
    assert symmetry_center(ConvexPolygon([(0, 0), (1, 0), (0, 1)])) is None
    c = symmetry_center(ConvexPolygon(SQUARE))
    assert c == pytest.approx((0.5, 0.5))
    kite = ConvexPolygon([(0, -1), (1, 0), (0, 2), (-1, 0)])
    assert symmetry_center(kite) is None


def test_hausdorff_against_dense_sampling(rng):
    for _ in range(5):
        P = random_convex_polygon(rng, 5)
        Q = random_convex_polygon(rng, 6)
        assert hausdorff_distance(P, Q) == pytest.approx(dense_hausdorff(P, Q, per_edge=2000), abs=1e-6)


def test_hausdorff_translation():
    P = ConvexPolygon(SQUARE)
    assert hausdorff_distance(P, P.translate((0.3, 0.4))) == pytest.approx(0.5)


def test_aligned_hausdorff_recovers_rigid_motion():
    P = ConvexPolygon(regular_vertices(5, 1.0))
    Q = P.rotate(0.4).translate((3, 1))
    assert aligned_hausdorff(Q, P) < 1e-6


def test_tolerances_validated():
    with pytest.raises(ValueError):
        Tolerances(eps_geom=-1.0)
    with pytest.raises(ValueError):
        Tolerances(eps_geom=1e-3, eps_contains=1e-9, eps_check=1e-7)
    assert Tolerances().tightened().eps_check == pytest.approx(1e-8)


@st.composite
def point_clouds(draw):
    n = draw(st.integers(3, 20))
    coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
    return np.array(draw(st.lists(st.tuples(coords, coords), min_size=n, max_size=n)))


@settings(max_examples=100, deadline=None)
@given(point_clouds())
def test_hull_contains_all_points(pts):
    H = convex_hull(pts)
    for q in pts:
        assert distance_to_polygon(H, q) <= 1e-7


@settings(max_examples=60, deadline=None)
@given(point_clouds(), point_clouds())
def test_minkowski_is_commutative(a, b):
    P, Q = convex_hull(a), convex_hull(b)
    assert hausdorff_distance(minkowski_sum(P, Q), minkowski_sum(Q, P)) <= 1e-7


@settings(max_examples=60, deadline=None)
@given(point_clouds())
def test_difference_body_perimeter_doubles(pts):
    P = convex_hull(pts)
    assert perimeter(difference_body(P)) == pytest.approx(2 * perimeter(P), rel=1e-9, abs=1e-9)


def test_nearly_collinear_hull_keeps_extreme_points():
    H = convex_hull([(0, 0), (0, 2), (3.5e-90, 1)])
    assert len(H) == 2
    assert perimeter(H) == pytest.approx(4.0)
