import math

import numpy as np
import pytest

from strutgeo.constructions import (
    ConstructionSpec,
    Kind,
    circumcircle_residual,
    construct,
    fan_ngon,
    fan_perimeter,
    integer_pentagon,
    narrow_isosceles,
    pairwise_distances,
    regular_polygon,
    snub_triangle,
    special_pentagon,
)
from strutgeo.geom import difference_body, hausdorff_distance, perimeter
from strutgeo.strut import has_delta_property


def test_regular_polygon_placement():
    P = regular_polygon(6)
    assert perimeter(P) == pytest.approx(6.0)
    assert any(np.allclose(v, (1.0, 0.0)) for v in P.vertices)
    with pytest.raises(ValueError):
        regular_polygon(2)


@pytest.mark.parametrize("alpha,holds", [(0.2, True), (0.5, True), (math.pi / 3, True),
                                         (math.pi / 3 + 0.05, False), (1.2, False)])
def test_narrow_isosceles_threshold(alpha, holds):
    P = narrow_isosceles(alpha)
    assert has_delta_property(P).holds == holds


def test_narrow_isosceles_shape():
    a = 0.5
    P = narrow_isosceles(a)
    apex = np.zeros(2)
    legs = sorted(math.dist(apex, v) for v in P.vertices if np.any(v != 0))
    assert legs == pytest.approx([2 * math.cos(a)] * 2)


@pytest.mark.parametrize("n,eps,alpha", [(4, 0.01, 0.005), (7, 0.05, 0.01), (10, 1e-3, 1e-4)])
def test_fan_ngon(n, eps, alpha):
    F = fan_ngon(n, eps, alpha)
    assert len(F) == n
    assert has_delta_property(F).holds
    assert perimeter(F) == pytest.approx(fan_perimeter(n, eps, alpha), abs=1e-9)


def test_fan_ngon_parameter_checks():
    with pytest.raises(ValueError):
        fan_ngon(5, 0.01, 0.02)
    with pytest.raises(ValueError):
        fan_ngon(3, 0.01, 0.001)


def test_fan_perimeter_tends_to_three():
    assert perimeter(fan_ngon(6, 1e-6, 1e-7)) == pytest.approx(3.0, abs=1e-5)


@pytest.mark.parametrize("a", [0.0, 0.2, 0.5])
def test_snub_difference_body_is_unit_hexagon(a):
    S = snub_triangle(a)
    assert perimeter(S) == pytest.approx(3.0)
    assert hausdorff_distance(difference_body(S), regular_polygon(6)) < 1e-9
    assert has_delta_property(S).holds == (a == 0)


def test_special_pentagon():
    P = special_pentagon()
    assert len(P) == 5
    assert perimeter(P) == pytest.approx(3.0, abs=1e-12)
    assert circumcircle_residual(P) < 1e-12
    # struts exist on the two sides at B (the origin), not on every side
    rep = has_delta_property(P)
    assert [c.side_index for c in rep.certificates][:2] == [0, 1]
    assert np.allclose(P.vertices[1], 0.0)


def test_integer_pentagon_distances():
    d = np.sort(pairwise_distances(integer_pentagon()))
    assert d == pytest.approx([4, 4, 4, 6, 6, 7, 8, 8, 8, 8], abs=1e-9)


def test_construct_dispatch():
    assert construct("regular_polygon", n=5, side=None) == regular_polygon(5)
    assert ConstructionSpec(Kind.snub_triangle, {"a": 0.2}).build() == snub_triangle(0.2)
    with pytest.raises(ValueError):
        construct("fan_ngon", n=5)
    with pytest.raises(ValueError):
        construct("no_such_kind")
