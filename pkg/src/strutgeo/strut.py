"""
Strut predicates.

A side ``AB`` of a convex polygon ``P`` has an ``l``-strut when some point
``C`` of ``P`` (boundary and vertices included) satisfies
``|AC| = |BC| = l``.  The Delta property asks this of every side; the
symmetric variant asks a centrally symmetric body to contain, for each
side, the rectangle inscribed in the unit circle whose side vector equals
the polygon side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geom import (
    DEFAULT_TOL,
    ConvexPolygon,
    Point,
    Tolerances,
    contains_point,
    distance_to_polygon,
    symmetry_center,
)


@dataclass(frozen=True)
class StrutCertificate:
    side_index: int
    apex: Point
    l: float = 1.0

    def to_dict(self):
        return {"side_index": self.side_index, "apex": [self.apex.x, self.apex.y], "l": self.l}


@dataclass(frozen=True)
class DeltaReport:
    holds: bool
    certificates: list = field(default_factory=list)
    failing_sides: list = field(default_factory=list)

    def to_dict(self):
        return {
            "holds": self.holds,
            "certificates": [c.to_dict() for c in self.certificates],
            "failing_sides": list(self.failing_sides),
        }


@dataclass(frozen=True)
class DeltaSReport:
    holds: bool
    rectangles: list = field(default_factory=list)
    failing_sides: list = field(default_factory=list)

    def to_dict(self):
        return {
            "holds": self.holds,
            "rectangles": [[[p.x, p.y] for p in r] for r in self.rectangles],
            "failing_sides": list(self.failing_sides),
        }


def strut_apexes(A, B, l: float = 1.0, eps: float = DEFAULT_TOL.eps_geom) -> list:
    """Intersection points of the circles ``S(A, l)`` and ``S(B, l)``.

    Two points symmetric about ``AB`` when ``|AB| < 2l``, the midpoint when
    ``|AB| = 2l`` within ``eps``, nothing otherwise.  The first returned
    apex lies to the left of ``A -> B``.
    """
    if not l > 0:
        raise ValueError("strut length must be positive")
    ax, ay = float(A[0]), float(A[1])
    bx, by = float(B[0]), float(B[1])
    dx, dy = bx - ax, by - ay
    s = math.hypot(dx, dy)
    if s <= eps:
        raise ValueError("coincident endpoints")
    mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
    if abs(s - 2 * l) <= eps:
        return [Point(mx, my)]
    if s > 2 * l:
        return []
    h = math.sqrt(l * l - 0.25 * s * s)
    nx, ny = -dy / s, dx / s
    return [Point(mx + h * nx, my + h * ny), Point(mx - h * nx, my - h * ny)]


def side_has_strut(P: ConvexPolygon, side_index: int, l: float = 1.0,
                   tol: Tolerances = DEFAULT_TOL) -> Optional[StrutCertificate]:
    n = len(P)
    if n < 2 or not 0 <= side_index < n:
        raise IndexError(f"side index {side_index} out of range for {n} vertices")
    A, B = P.side(side_index)
    # counterclockwise order puts the interior on the left, which strut_apexes returns first
    for apex in strut_apexes(A, B, l, tol.eps_geom):
        if contains_point(P, apex, tol.eps_contains):
            return StrutCertificate(side_index, apex, l)
    return None


def has_delta_property(P: ConvexPolygon, l: float = 1.0,
                       tol: Tolerances = DEFAULT_TOL) -> DeltaReport:
    if len(P) < 3:
        raise ValueError("the Delta property needs a polygon with at least 3 vertices")
    certs, failing = [], []
    for i in range(len(P)):
        c = side_has_strut(P, i, l, tol)
        if c is None:
            failing.append(i)
        else:
            certs.append(c)
    return DeltaReport(not failing, certs, failing)


def strut_deficit(P: ConvexPolygon, side_index: int, l: float = 1.0) -> float:
    """How far side ``side_index`` is from having an ``l``-strut.

    Zero when an apex lies in ``P``; otherwise the distance from the
    nearest apex to ``P``, or the excess length ``|AB| - 2l`` plus the
    midpoint distance when no apex exists.
    """
    A, B = P.side(side_index)
    s = math.dist(A, B)
    if s > 2 * l:
        mid = ((A[0] + B[0]) / 2, (A[1] + B[1]) / 2)
        return (s - 2 * l) + distance_to_polygon(P, mid)
    return min(distance_to_polygon(P, c) for c in strut_apexes(A, B, l, eps=0.0))


def delta_deficit(P: ConvexPolygon, l: float = 1.0) -> float:
    return sum(strut_deficit(P, i, l) for i in range(len(P)))


def inscribed_rectangle(side_vector, eps: float = DEFAULT_TOL.eps_geom) -> list:
    """Rectangle ``K, L, M, N`` inscribed in the unit circle with ``KL = NM = v``.

    Vertices are counterclockwise; ``h = sqrt(4 - |v|^2)`` is the other
    side length.
    """
    vx, vy = float(side_vector[0]), float(side_vector[1])
    s = math.hypot(vx, vy)
    if s <= 0:
        raise ValueError("side vector must be non-zero")
    if s > 2 + eps:
        raise ValueError("side too long for unit-circumradius rectangle")
    h = math.sqrt(max(0.0, 4 - s * s))
    nx, ny = -vy / s, vx / s
    hv = (0.5 * vx, 0.5 * vy)
    hn = (0.5 * h * nx, 0.5 * h * ny)
    K = Point(-hv[0] - hn[0], -hv[1] - hn[1])
    L = Point(hv[0] - hn[0], hv[1] - hn[1])
    M = Point(hv[0] + hn[0], hv[1] + hn[1])
    N = Point(-hv[0] + hn[0], -hv[1] + hn[1])
    return [K, L, M, N]


def has_delta_s_property(P: ConvexPolygon, tol: Tolerances = DEFAULT_TOL) -> DeltaSReport:
    """Symmetric Delta property for a body centered at the origin.

    Relies on convexity: the rectangle lies in ``P`` iff its four vertices do.
    """
    c = symmetry_center(P, tol.eps_check)
    if c is None or math.hypot(c.x, c.y) > tol.eps_check:
        raise ValueError("polygon is not centrally symmetric about the origin")
    rects, failing = [], []
    e = P.edges()
    for i, v in enumerate(e):
        if math.hypot(*v) > 2 + tol.eps_geom:
            failing.append(i)
            continue
        r = inscribed_rectangle(v, tol.eps_geom)
        if all(contains_point(P, q, tol.eps_contains) for q in r):
            rects.append(tuple(r))
        else:
            failing.append(i)
    return DeltaSReport(not failing, rects, failing)


def delta_s_deficit(P: ConvexPolygon) -> float:
    """Total distance of the inscribed-rectangle vertices outside ``P``."""
    total = 0.0
    for v in P.edges():
        s = math.hypot(*v)
        if s > 2:
            total += s - 2
            v = np.asarray(v) * (2 / s)
        total += sum(distance_to_polygon(P, q) for q in inscribed_rectangle(v))
    return total
