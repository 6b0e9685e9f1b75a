"""Independent reference computations used to cross-check the library."""

import math

import numpy as np
from scipy.spatial import ConvexHull
from scipy.spatial.distance import cdist


def hull_vertices(points) -> np.ndarray:
    """Hull vertices (scipy/Qhull), counterclockwise."""
    pts = np.asarray(points, dtype=float)
    h = ConvexHull(pts)
    return pts[h.vertices]


def minkowski_oracle(P, Q) -> np.ndarray:
    sums = (P.vertices[:, None, :] + Q.vertices[None, :, :]).reshape(-1, 2)
    return hull_vertices(sums)


def same_vertex_set(a, b, tol) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    d = cdist(a, b)
    return bool(np.all(d.min(axis=1) <= tol) and np.all(d.min(axis=0) <= tol))


def ray_cast_inside(vertices, q) -> bool:
    """Even-odd rule; strict interior points only (boundary is ambiguous)."""
    x, y = q
    inside = False
    v = np.asarray(vertices)
    n = len(v)
    for i in range(n):
        (x1, y1), (x2, y2) = v[i], v[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


def boundary_samples(P, per_edge: int = 400) -> np.ndarray:
    v = P.vertices
    t = np.linspace(0, 1, per_edge, endpoint=False)[:, None]
    return np.vstack([v[i] + t * (v[(i + 1) % len(v)] - v[i]) for i in range(len(v))])


def dense_hausdorff(P, Q, per_edge: int = 400) -> float:
    """Hausdorff distance of the filled bodies from boundary samples."""
    a, b = boundary_samples(P, per_edge), boundary_samples(Q, per_edge)
    d = cdist(a, b)
    da = np.where([ray_cast_inside(Q.vertices, q) for q in a], 0.0, d.min(axis=1))
    db = np.where([ray_cast_inside(P.vertices, q) for q in b], 0.0, d.min(axis=0))
    return max(da.max(), db.max())


def central_difference(f, x, h: float = 1e-6) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for k in range(len(x)):
        e = np.zeros_like(x)
        e[k] = h
        out[k] = (f(x + e) - f(x - e)) / (2 * h)
    return out


def real_roots(poly, lo=-math.inf, hi=math.inf, imag_tol=1e-9) -> list:
    r = np.roots(poly.coef[::-1])
    return sorted(float(z.real) for z in r if abs(z.imag) < imag_tol and lo <= z.real <= hi)


def brute_perimeter(vertices) -> float:
    v = np.asarray(vertices)
    return float(sum(math.dist(v[i], v[(i + 1) % len(v)]) for i in range(len(v))))
