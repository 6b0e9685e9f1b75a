"""Convex polygons with unit struts: predicates, difference bodies, the pentagon family and searches."""

from .constructions import (
    construct,
    fan_ngon,
    integer_pentagon,
    narrow_isosceles,
    regular_polygon,
    snub_triangle,
    special_pentagon,
)
from .geom import (
    DEFAULT_TOL,
    ConvexPolygon,
    Point,
    Tolerances,
    central_symmetral,
    contains_point,
    convex_hull,
    difference_body,
    hausdorff_distance,
    minkowski_sum,
    perimeter,
    symmetry_center,
)
from .pentagon import (
    PentagonParams,
    build_pentagon,
    case1_critical_points,
    case2_critical_points,
    extremal_constants,
    g_curve,
    perimeter_A,
    perimeter_B,
    perimeter_C,
    stationarity_D,
    verify_min_over_omega,
)
from .search import SearchConfig, SearchReport, centsym_deficit_search, conjecture_search, minimize_delta_perimeter
from .strut import has_delta_property, has_delta_s_property, inscribed_rectangle, side_has_strut, strut_apexes

__version__ = "0.1.0"

__all__ = [
    "ConvexPolygon",
    "DEFAULT_TOL",
    "PentagonParams",
    "Point",
    "SearchConfig",
    "SearchReport",
    "Tolerances",
    "build_pentagon",
    "case1_critical_points",
    "case2_critical_points",
    "central_symmetral",
    "centsym_deficit_search",
    "conjecture_search",
    "construct",
    "contains_point",
    "convex_hull",
    "difference_body",
    "extremal_constants",
    "fan_ngon",
    "g_curve",
    "has_delta_property",
    "has_delta_s_property",
    "hausdorff_distance",
    "inscribed_rectangle",
    "integer_pentagon",
    "minimize_delta_perimeter",
    "minkowski_sum",
    "narrow_isosceles",
    "perimeter",
    "perimeter_A",
    "perimeter_B",
    "perimeter_C",
    "regular_polygon",
    "side_has_strut",
    "snub_triangle",
    "special_pentagon",
    "stationarity_D",
    "strut_apexes",
    "symmetry_center",
    "verify_min_over_omega",
]
