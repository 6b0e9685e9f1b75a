"""
Closed-form polygon families with fixed canonical placements.

Used as fixtures and as near-extremal witnesses for the strut problems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .geom import ConvexPolygon, convex_hull, regular_vertices
from .pentagon import ARCCOS_QUARTER, PentagonParams, build_pentagon


class Kind(str, Enum):
    regular_polygon = "regular_polygon"
    narrow_isosceles = "narrow_isosceles"
    fan_ngon = "fan_ngon"
    snub_triangle = "snub_triangle"
    special_pentagon = "special_pentagon"
    integer_pentagon = "integer_pentagon"


@dataclass(frozen=True)
class ConstructionSpec:
    kind: Kind
    parameters: dict = field(default_factory=dict)

    def build(self) -> ConvexPolygon:
        return construct(self.kind, **self.parameters)


def regular_polygon(n: int, side: float = 1.0) -> ConvexPolygon:
    """Regular ``n``-gon centered at the origin, first vertex on the positive x-axis."""
    if n < 3 or int(n) != n:
        raise ValueError("n must be an integer >= 3")
    if not side > 0:
        raise ValueError("side must be positive")
    R = side / (2 * math.sin(math.pi / n))
    return ConvexPolygon(regular_vertices(int(n), R))


def narrow_isosceles(alpha: float) -> ConvexPolygon:
    """Triangle with apex angle ``alpha`` at ``C`` and legs ``|CA| = |CB| = 2 cos(alpha)``.

    ``C`` sits at the origin with the angle bisector along +x.
    """
    if not 0 < alpha < math.pi / 2:
        raise ValueError("alpha must lie in (0, pi/2)")
    L = 2 * math.cos(alpha)
    h = alpha / 2
    return ConvexPolygon([(0.0, 0.0), (L * math.cos(h), -L * math.sin(h)),
                          (L * math.cos(h), L * math.sin(h))])


def fan_ngon(n: int, eps: float, alpha: float) -> ConvexPolygon:
    """Regular triangle of side ``1 + eps`` with a fan of ``n - 3`` extra vertices.

    ``A1`` is the origin, ``A2 = (1 + eps, 0)``, ``A3`` at 60 degrees, and
    ``A4 .. An`` continue on the circle of radius ``1 + eps`` about ``A1``
    with angular step ``alpha``.
    """
    if n < 4 or int(n) != n:
        raise ValueError("n must be an integer >= 4")
    if not eps > 0:
        raise ValueError("eps must be positive")
    if not 0 < alpha < min(math.pi / n, eps):
        raise ValueError("alpha must satisfy 0 < alpha < min(pi/n, eps)")
    r = 1 + eps
    angles = [0.0] + [math.pi / 3 + k * alpha for k in range(int(n) - 2)]
    pts = [(0.0, 0.0)] + [(r * math.cos(t), r * math.sin(t)) for t in angles]
    return ConvexPolygon(pts)


def fan_perimeter(n: int, eps: float, alpha: float) -> float:
    return (1 + eps) * (3 + 2 * (n - 3) * math.sin(alpha / 2))


def snub_triangle(a: float) -> ConvexPolygon:
    """Regular triangle of side ``1 + a`` with corner triangles of side ``a`` cut off.

    Centered at the origin with one long side horizontal at the bottom.
    """
    if not 0 <= a <= 0.5:
        raise ValueError("a must lie in [0, 1/2]")
    s = 1 + a
    T = np.array([(0.0, 0.0), (s, 0.0), (s / 2, s * math.sqrt(3) / 2)])
    T = T - T.mean(axis=0)
    if a == 0:
        return ConvexPolygon(T)
    pts = []
    for i in range(3):
        P, Q = T[i], T[(i + 1) % 3]
        d = (Q - P) / s
        pts.append(P + a * d)
        pts.append(Q - a * d)
    return convex_hull(pts)


def special_pentagon(scale: float = 1.0) -> ConvexPolygon:
    """The perimeter-3 pentagon with all three base angles ``arccos(1/4)``.

    Its vertices are concyclic; scaled by 8 every side and diagonal is an integer.
    """
    if not scale > 0:
        raise ValueError("scale must be positive")
    P = build_pentagon(PentagonParams(ARCCOS_QUARTER, ARCCOS_QUARTER, ARCCOS_QUARTER))
    return P.scale(scale) if scale != 1 else P


def integer_pentagon() -> ConvexPolygon:
    return special_pentagon(8.0)


def pairwise_distances(P: ConvexPolygon) -> np.ndarray:
    v = P.vertices
    d = np.hypot(*(v[:, None, :] - v[None, :, :]).transpose(2, 0, 1))
    iu = np.triu_indices(len(v), 1)
    return d[iu]


def circumcircle_residual(P: ConvexPolygon) -> float:
    """Max deviation of vertex radii from the circle through the first three vertices."""
    (ax, ay), (bx, by), (cx, cy) = P.vertices[:3]
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / d
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / d
    r = np.hypot(P.vertices[:, 0] - ux, P.vertices[:, 1] - uy)
    return float(np.max(np.abs(r - r[0])))


_BUILDERS = {
    Kind.regular_polygon: lambda n=3, side=1.0, **_: regular_polygon(int(n), side),
    Kind.narrow_isosceles: lambda alpha, **_: narrow_isosceles(alpha),
    Kind.fan_ngon: lambda n, eps, alpha, **_: fan_ngon(int(n), eps, alpha),
    Kind.snub_triangle: lambda a, **_: snub_triangle(a),
    Kind.special_pentagon: lambda scale=1.0, **_: special_pentagon(scale),
    Kind.integer_pentagon: lambda **_: integer_pentagon(),
}


def construct(kind, **parameters) -> ConvexPolygon:
    kind = Kind(kind)
    params = {k: v for k, v in parameters.items() if v is not None}
    try:
        return _BUILDERS[kind](**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {kind.value}: {exc}") from None
