"""
Planar convex-geometry kernel.

Polygons are immutable, counterclockwise, strictly convex after
normalization, and may degenerate to a segment (2 vertices) or a single
point (1 vertex).  Containment is closed: boundary points are inside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

EPS_GEOM = 1e-9
EPS_CONTAINS = 1e-9
EPS_CHECK = 1e-7


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Tolerances:
    """Slack used by the geometric predicates.

    ``eps_geom`` drives vertex deduplication and collinearity merging,
    ``eps_contains`` is the closed-containment slack and ``eps_check`` the
    slack for verifying derived properties.
    """

    eps_geom: float = EPS_GEOM
    eps_contains: float = EPS_CONTAINS
    eps_check: float = EPS_CHECK

    def __post_init__(self):
        for name in ("eps_geom", "eps_contains", "eps_check"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be finite and positive, got {value!r}")
        if not (self.eps_geom <= self.eps_contains <= self.eps_check):
            raise ValueError("tolerances must satisfy eps_geom <= eps_contains <= eps_check")

    def tightened(self, factor: float = 10.0) -> "Tolerances":
        return Tolerances(self.eps_geom / factor, self.eps_contains / factor, self.eps_check / factor)


DEFAULT_TOL = Tolerances()


def _as_points(points) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1 and arr.size == 2:
        arr = arr.reshape(1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("points must be finite")
    return arr


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _lex_first(v: np.ndarray) -> np.ndarray:
    start = int(np.lexsort((v[:, 1], v[:, 0]))[0])
    return np.roll(v, -start, axis=0)


def _seg_dist(q, a, b) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    den = dx * dx + dy * dy
    t = 0.0 if den == 0 else min(1.0, max(0.0, ((q[0] - a[0]) * dx + (q[1] - a[1]) * dy) / den))
    return math.hypot(q[0] - a[0] - t * dx, q[1] - a[1] - t * dy)


def _prune(pts: list, eps: float) -> list:
    """Drop vertices within ``eps`` of the segment joining their neighbours."""
    changed = True
    while changed and len(pts) > 2:
        changed = False
        m = len(pts)
        for i in range(m):
            if _seg_dist(pts[i], pts[i - 1], pts[(i + 1) % m]) <= eps:
                del pts[i]
                changed = True
                break
    if len(pts) == 2 and math.hypot(*(pts[0] - pts[1])) <= eps:
        pts = pts[:1]
    return pts


def _hull_array(pts: np.ndarray, eps: float) -> np.ndarray:
    # exact monotone chain, then near-collinear vertices pruned
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    uniq = [pts[0]]
    for p in pts[1:]:
        if p[0] != uniq[-1][0] or p[1] != uniq[-1][1]:
            uniq.append(p)
    if len(uniq) == 1:
        return np.array(uniq)

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    hull = chain(uniq)[:-1] + chain(uniq[::-1])[:-1]
    return np.array(_prune(hull, eps))


def _normalize(v: np.ndarray, eps: float) -> np.ndarray:
    n = len(v)
    if n == 0:
        raise ValueError("empty point set")
    # drop cyclic duplicates
    keep = [v[0]]
    for p in v[1:]:
        if math.hypot(p[0] - keep[-1][0], p[1] - keep[-1][1]) > eps:
            keep.append(p)
    while len(keep) > 1 and math.hypot(*(keep[0] - keep[-1])) <= eps:
        keep.pop()
    v = np.array(keep)
    if len(v) <= 2:
        return _lex_first(v) if len(v) == 2 else v

    x, y = v[:, 0], v[:, 1]
    area2 = float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))
    if area2 < 0:
        v = v[::-1]
        area2 = -area2
    scale = float(np.max(np.ptp(v, axis=0)))
    if area2 <= eps * scale:
        # flat input: the hull is the segment between the extreme points
        return _lex_first(_hull_array(v, eps))

    m = len(v)
    for i in range(m):
        prev, cur, nxt = v[i - 1], v[i], v[(i + 1) % m]
        base = math.hypot(nxt[0] - prev[0], nxt[1] - prev[1])
        if _cross(prev, cur, nxt) < -eps * max(base, 1.0):
            raise ValueError("vertices do not form a convex polygon")
    return _lex_first(np.array(_prune(list(v), eps)))


class ConvexPolygon:
    """Immutable convex polygon with canonical vertex order.

    Vertices are counterclockwise, start at the lexicographically smallest
    vertex and contain no duplicate or collinear entries (within
    ``eps``).  Non-convex vertex sequences raise ``ValueError``; use
    :func:`convex_hull` for arbitrary point sets.
    """

    __slots__ = ("_v",)

    def __init__(self, vertices, eps: float = EPS_GEOM):
        v = _normalize(_as_points(vertices), eps)
        v = np.ascontiguousarray(v, dtype=float)
        v.flags.writeable = False
        self._v = v

    @classmethod
    def _trusted(cls, v: np.ndarray) -> "ConvexPolygon":
        obj = cls.__new__(cls)
        v = np.ascontiguousarray(v, dtype=float)
        v.flags.writeable = False
        obj._v = v
        return obj

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    def __len__(self):
        return len(self._v)

    def __iter__(self):
        return (Point(float(p[0]), float(p[1])) for p in self._v)

    def __getitem__(self, i) -> Point:
        p = self._v[i % len(self._v)]
        return Point(float(p[0]), float(p[1]))

    def __eq__(self, other):
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self._v.shape == other._v.shape and bool(np.array_equal(self._v, other._v))

    def __hash__(self):
        return hash(self._v.tobytes())

    def __repr__(self):
        pts = ", ".join(f"({p[0]:.6g}, {p[1]:.6g})" for p in self._v)
        return f"ConvexPolygon([{pts}])"

    def edges(self) -> np.ndarray:
        """Edge vectors ``v[i+1] - v[i]`` (closing edge included)."""
        if len(self._v) == 1:
            return np.zeros((0, 2))
        return np.roll(self._v, -1, axis=0) - self._v

    def side(self, i: int) -> tuple[Point, Point]:
        return self[i], self[i + 1]

    def perimeter(self) -> float:
        return perimeter(self)

    def area(self) -> float:
        return signed_area(self)

    def translate(self, t) -> "ConvexPolygon":
        return ConvexPolygon._trusted(self._v + np.asarray(t, dtype=float))

    def scale(self, s: float, center=(0.0, 0.0)) -> "ConvexPolygon":
        if s <= 0:
            raise ValueError("scale factor must be positive")
        c = np.asarray(center, dtype=float)
        return ConvexPolygon._trusted((self._v - c) * s + c)

    def rotate(self, angle: float, center=(0.0, 0.0)) -> "ConvexPolygon":
        c = np.asarray(center, dtype=float)
        ca, sa = math.cos(angle), math.sin(angle)
        rot = np.array([[ca, -sa], [sa, ca]])
        return ConvexPolygon((self._v - c) @ rot.T + c)


def convex_hull(points, eps: float = EPS_GEOM) -> ConvexPolygon:
    """Smallest convex polygon containing ``points``.

    Collinear boundary points are removed; a point or a segment is
    returned for degenerate input.

    >>> convex_hull([(0, 0), (1, 0), (0, 1), (0.25, 0.25)]).vertices.tolist()
    [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]
    """
    pts = _as_points(points) if len(points) else np.zeros((0, 2))
    if len(pts) == 0:
        raise ValueError("empty point set")
    return ConvexPolygon._trusted(_lex_first(_hull_array(pts, eps)))


def perimeter(P: ConvexPolygon) -> float:
    # a segment is traversed twice, a point has zero length
    return float(np.sum(np.hypot(*P.edges().T))) if len(P) > 1 else 0.0


def signed_area(P: ConvexPolygon) -> float:
    v = P.vertices
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _segment_distance(q, a, b) -> float:
    ab = b - a
    denom = float(ab @ ab)
    t = 0.0 if denom == 0 else min(1.0, max(0.0, float((q - a) @ ab) / denom))
    d = q - (a + t * ab)
    return math.hypot(d[0], d[1])


def distance_to_polygon(P: ConvexPolygon, q) -> float:
    """Euclidean distance from ``q`` to the (closed) polygon; 0 inside."""
    q = np.asarray(q, dtype=float)
    v = P.vertices
    if len(v) == 1:
        return float(math.hypot(*(q - v[0])))
    if len(v) == 2:
        return _segment_distance(q, v[0], v[1])
    e = P.edges()
    lengths = np.hypot(e[:, 0], e[:, 1])
    # signed distance to each edge line, positive inside
    inside = (e[:, 0] * (q[1] - v[:, 1]) - e[:, 1] * (q[0] - v[:, 0])) / lengths
    if np.all(inside >= 0):
        return 0.0
    return min(_segment_distance(q, v[i], v[(i + 1) % len(v)]) for i in range(len(v)))


def contains_point(P: ConvexPolygon, q, tol: float = EPS_CONTAINS) -> bool:
    """Closed containment with slack ``tol``.

    For a proper polygon the test is against every edge half-plane; for a
    point or a segment it is a distance test.
    """
    q = np.asarray(q, dtype=float)
    v = P.vertices
    if len(v) < 3:
        return distance_to_polygon(P, q) <= tol
    e = P.edges()
    lengths = np.hypot(e[:, 0], e[:, 1])
    signed = (e[:, 0] * (q[1] - v[:, 1]) - e[:, 1] * (q[0] - v[:, 0])) / lengths
    return bool(np.all(signed >= -tol))


def _bottom_left_start(v: np.ndarray) -> int:
    return int(np.lexsort((v[:, 0], v[:, 1]))[0])


def _sorted_edges(P: ConvexPolygon):
    v = P.vertices
    if len(v) == 1:
        return v[0], np.zeros((0, 2))
    k = _bottom_left_start(v)
    v = np.roll(v, -k, axis=0)
    e = np.roll(v, -1, axis=0) - v
    return v[0], e


def minkowski_sum(P: ConvexPolygon, Q: ConvexPolygon, eps: float = EPS_GEOM) -> ConvexPolygon:
    """Minkowski sum by merging the two edge sequences by polar angle.

    Both edge sequences start at the lowest (then leftmost) vertex so their
    angles increase monotonically in ``[0, 2*pi)``.
    """
    p0, ep = _sorted_edges(P)
    q0, eq = _sorted_edges(Q)
    ap = np.mod(np.arctan2(ep[:, 1], ep[:, 0]), 2 * math.pi)
    aq = np.mod(np.arctan2(eq[:, 1], eq[:, 0]), 2 * math.pi)
    merged = []
    i = j = 0
    while i < len(ep) or j < len(eq):
        if j >= len(eq) or (i < len(ep) and ap[i] <= aq[j]):
            merged.append(ep[i])
            i += 1
        else:
            merged.append(eq[j])
            j += 1
    start = p0 + q0
    if not merged:
        return ConvexPolygon._trusted(start.reshape(1, 2))
    pts = start + np.cumsum(np.vstack([np.zeros((1, 2)), np.array(merged[:-1])]), axis=0)
    return ConvexPolygon(pts, eps=eps)


def reflect(P: ConvexPolygon) -> ConvexPolygon:
    """Point reflection ``-P`` through the origin."""
    return ConvexPolygon._trusted(_lex_first(-P.vertices))


def difference_body(P: ConvexPolygon) -> ConvexPolygon:
    """``D(P) = P + (-P)``; centrally symmetric about the origin."""
    return minkowski_sum(P, reflect(P))


def central_symmetral(P: ConvexPolygon) -> ConvexPolygon:
    """``P/2 + (-P)/2``; same perimeter as ``P``."""
    return difference_body(P).scale(0.5)


def symmetry_center(P: ConvexPolygon, tol: float = EPS_CHECK) -> Optional[Point]:
    """Center of central symmetry, or ``None``.

    Opposite vertices ``v[i]`` and ``v[i + n/2]`` must share the same
    midpoint within ``tol``.
    """
    v = P.vertices
    n = len(v)
    if n == 1:
        return Point(float(v[0, 0]), float(v[0, 1]))
    if n % 2:
        return None
    h = n // 2
    mids = 0.5 * (v[:h] + v[h:])
    c = mids.mean(axis=0)
    if np.max(np.hypot(*(mids - c).T)) > tol:
        return None
    return Point(float(c[0]), float(c[1]))


def directed_hausdorff(P: ConvexPolygon, Q: ConvexPolygon) -> float:
    # distance to a convex set is convex, so its max over P sits at a vertex
    return max(distance_to_polygon(Q, p) for p in P.vertices)


def hausdorff_distance(P: ConvexPolygon, Q: ConvexPolygon) -> float:
    return max(directed_hausdorff(P, Q), directed_hausdorff(Q, P))


def vertex_centroid(P: ConvexPolygon) -> np.ndarray:
    return P.vertices.mean(axis=0)


def aligned_hausdorff(P: ConvexPolygon, Q: ConvexPolygon, n_angles: int = 720) -> float:
    """Hausdorff distance after centering both bodies and optimizing a rotation of ``P``.

    Bodies are centered on their area centroids (vertex centroid for
    degenerate ones); the rotation angle is scanned then refined.
    """
    def center(X):
        v = X.vertices
        if len(v) < 3:
            return vertex_centroid(X)
        x, y = v[:, 0], v[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        cr = x * yn - xn * y
        a = cr.sum() / 2
        return np.array([((x + xn) * cr).sum(), ((y + yn) * cr).sum()]) / (6 * a)

    Pc = P.translate(-center(P))
    Qc = Q.translate(-center(Q))

    def h(t):
        return hausdorff_distance(Pc.rotate(t), Qc)

    grid = np.linspace(0, 2 * math.pi, n_angles, endpoint=False)
    vals = [h(t) for t in grid]
    k = int(np.argmin(vals))
    lo, hi = grid[k] - 2 * math.pi / n_angles, grid[k] + 2 * math.pi / n_angles
    best = vals[k]
    for _ in range(60):
        m1, m2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
        if h(m1) < h(m2):
            hi = m2
        else:
            lo = m1
    return min(best, h(0.5 * (lo + hi)))


def same_polygon(P: ConvexPolygon, Q: ConvexPolygon, tol: float = EPS_GEOM) -> bool:
    """Vertex sets equal within ``tol`` (up to cyclic shift)."""
    a, b = P.vertices, Q.vertices
    if a.shape != b.shape:
        return False
    n = len(a)
    for k in range(n):
        if np.max(np.hypot(*(np.roll(b, -k, axis=0) - a).T)) <= tol:
            return True
    return False


def regular_vertices(n: int, circumradius: float, phase: float = 0.0) -> np.ndarray:
    t = phase + 2 * math.pi * np.arange(n) / n
    return circumradius * np.column_stack([np.cos(t), np.sin(t)])


def random_convex_polygon(rng: np.random.Generator, n: int, radius: float = 1.0,
                          jitter: float = 0.6) -> ConvexPolygon:
    """Random strictly convex ``n``-gon: sorted random angles on a jittered ellipse."""
    while True:
        t = np.sort(rng.uniform(0, 2 * math.pi, n))
        ax = radius * (1 + jitter * rng.uniform(-0.5, 0.5))
        ay = radius * (1 + jitter * rng.uniform(-0.5, 0.5))
        pts = np.column_stack([ax * np.cos(t), ay * np.sin(t)])
        rot = rng.uniform(0, 2 * math.pi)
        c, s = math.cos(rot), math.sin(rot)
        pts = pts @ np.array([[c, -s], [s, c]]).T + rng.normal(scale=radius, size=2)
        P = convex_hull(pts)
        if len(P) == n:
            return P


def polygon_from_points(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    return ConvexPolygon(list(points))
