"""
The five-point family ``A, B, C, E, F`` with ``|AE| = |BE| = |BF| = |CF| = 1``.

The family is parametrized by the base angles ``alpha`` (triangle ABE),
``beta`` (triangle BCF) and ``gamma`` (triangle BEF), with
``theta = pi - 2*gamma`` the apex angle ``EBF``.  Its perimeter has three
equivalent closed forms; the module also carries the stationarity
function in ``(alpha, theta)``, its zero curve ``g``, the extremal
constants, and the catalogue of critical points of the perimeter on the
constraint slice ``cos(alpha) + cos(beta) = 1/2``.

All angles are in radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from numpy.polynomial import Polynomial
from scipy.ndimage import minimum_filter
from scipy.optimize import minimize

from .geom import ConvexPolygon, convex_hull
from .roots import isolate_real_roots, roots_in

PI3 = math.pi / 3
PI2 = math.pi / 2
RADICAND_CLAMP = 1e-12
ARCCOS_QUARTER = math.acos(0.25)


@dataclass(frozen=True)
class PentagonParams:
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        a, b, g = self.alpha, self.beta, self.gamma
        slack = 1e-12
        if not (-slack <= a <= PI2 + slack and -slack <= b <= PI2 + slack):
            raise ValueError(f"alpha and beta must lie in [0, pi/2], got {a!r}, {b!r}")
        if not (0 < g <= PI2 + slack):
            raise ValueError(f"gamma must lie in (0, pi/2], got {g!r}")

    @property
    def theta(self) -> float:
        return math.pi - 2 * self.gamma

    @property
    def u(self) -> float:
        return math.cos(self.alpha)

    @property
    def v(self) -> float:
        return math.cos(self.beta)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)

    def in_omega(self, tol: float = 1e-12) -> bool:
        box = all(PI3 - tol <= t <= PI2 + tol for t in self.as_tuple())
        return box and self.u + self.v >= 0.5 - tol

    def in_omega1(self, tol: float = 1e-12) -> bool:
        return self.in_omega(tol) and abs(self.u + self.v - 0.5) <= tol

    def substitution(self) -> tuple[float, float, float]:
        """``(x, y, z) = (tan(alpha/2), tan(beta/2), tan(gamma))``."""
        z = math.inf if abs(self.gamma - PI2) < 1e-15 else math.tan(self.gamma)
        return (math.tan(self.alpha / 2), math.tan(self.beta / 2), z)

    @classmethod
    def from_substitution(cls, x: float, y: float, z: float) -> "PentagonParams":
        return cls(2 * math.atan(x), 2 * math.atan(y), math.atan(z))

    def to_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}


# -- geometry ---------------------------------------------------------------

def pentagon_points(p: PentagonParams) -> dict[str, np.ndarray]:
    """Named points with ``B`` at the origin and ``E``, ``F`` symmetric about the y-axis."""
    h = p.theta / 2
    B = np.zeros(2)
    E = np.array([math.sin(h), math.cos(h)])
    F = np.array([-math.sin(h), math.cos(h)])
    ta = PI2 - h + p.alpha
    tc = PI2 + h - p.beta
    A = 2 * math.cos(p.alpha) * np.array([math.cos(ta), math.sin(ta)])
    C = 2 * math.cos(p.beta) * np.array([math.cos(tc), math.sin(tc)])
    return {"A": A, "B": B, "C": C, "E": E, "F": F}


def build_pentagon(p: PentagonParams) -> ConvexPolygon:
    pts = pentagon_points(p)
    return convex_hull([pts[k] for k in "ABCEF"])


def in_convex_position(p: PentagonParams, eps: float = 1e-9) -> bool:
    """True when ``A, B, C, E, F`` are distinct and strictly convex in that (counterclockwise) order."""
    pts = pentagon_points(p)
    seq = [pts[k] for k in "ABCEF"]
    for i in range(5):
        o, a, b = seq[i - 1], seq[i], seq[(i + 1) % 5]
        if np.hypot(*(a - o)) <= eps:
            return False
        cr = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
        if cr <= eps:
            return False
    return True


# -- closed forms ----------------------------------------------------------

def _sqrt(r):
    r = np.asarray(r, dtype=float)
    if np.any(r < -RADICAND_CLAMP):
        raise ValueError("invalid configuration: negative radicand")
    out = np.sqrt(np.maximum(r, 0.0))
    return float(out) if out.ndim == 0 else out


def strut_chord_f(x, gamma, form: int = 1):
    """Squared chord ``|AF|^2`` as a function of the base angle ``x``.

    Four algebraically equal forms; forms 1 and 2 are written with
    ``theta = pi - 2*gamma``, forms 3 and 4 with ``gamma``.
    """
    x = np.asarray(x, dtype=float)
    g = np.asarray(gamma, dtype=float)
    th = np.pi - 2 * g
    if form == 1:
        out = 1 + 4 * np.cos(x) ** 2 - 4 * np.cos(x) * np.cos(x - th)
    elif form == 2:
        out = 3 + 2 * np.cos(2 * x) - 2 * np.cos(2 * x - th) - 2 * np.cos(th)
    elif form == 3:
        out = 3 + 2 * np.cos(2 * x) + 2 * np.cos(2 * g) + 2 * np.cos(2 * x + 2 * g)
    elif form == 4:
        out = 1 + 4 * np.cos(x) ** 2 + 4 * np.cos(x) * np.cos(x + 2 * g)
    else:
        raise ValueError(f"unknown form {form!r}")
    return float(out) if out.ndim == 0 else out


def perimeter_A(alpha, beta, gamma):
    alpha, beta, gamma = (np.asarray(t, dtype=float) for t in (alpha, beta, gamma))
    fa = 1 + 4 * np.cos(alpha) ** 2 + 4 * np.cos(alpha) * np.cos(alpha + 2 * gamma)
    fb = 1 + 4 * np.cos(beta) ** 2 + 4 * np.cos(beta) * np.cos(beta + 2 * gamma)
    return 2 * (np.cos(alpha) + np.cos(beta) + np.cos(gamma)) + _sqrt(fa) + _sqrt(fb)


def perimeter_B(alpha, beta, theta):
    alpha, beta, theta = (np.asarray(t, dtype=float) for t in (alpha, beta, theta))
    fa = 1 + 4 * np.cos(alpha) ** 2 - 4 * np.cos(alpha) * np.cos(alpha - theta)
    fb = 1 + 4 * np.cos(beta) ** 2 - 4 * np.cos(beta) * np.cos(beta - theta)
    return 2 * (np.cos(alpha) + np.cos(beta) + np.sin(theta / 2)) + _sqrt(fa) + _sqrt(fb)


def perimeter_C(u, v, gamma):
    u, v, gamma = (np.asarray(t, dtype=float) for t in (u, v, gamma))
    c, s = np.cos(gamma), np.sin(gamma)
    ra = 1 + 8 * u * u * c * c - 8 * u * _sqrt(1 - u * u) * s * c
    rb = 1 + 8 * v * v * c * c - 8 * v * _sqrt(1 - v * v) * s * c
    return 2 * u + 2 * v + 2 * c + _sqrt(ra) + _sqrt(rb)


class Form(str, Enum):
    A = "A"
    B = "B"
    C = "C"


def perimeter_closed_form(p: PentagonParams, form: str = "A") -> float:
    form = Form(form)
    if form is Form.A:
        return float(perimeter_A(p.alpha, p.beta, p.gamma))
    if form is Form.B:
        return float(perimeter_B(p.alpha, p.beta, p.theta))
    return float(perimeter_C(p.u, p.v, p.gamma))


def gradient_closed_form(p: PentagonParams, eps: float = 1e-9) -> tuple[float, float, float]:
    """Partial derivatives of the gamma-form perimeter in ``(alpha, beta, gamma)``."""
    a, b, g = p.as_tuple()
    fa = strut_chord_f(a, g, form=4)
    fb = strut_chord_f(b, g, form=4)
    if fa <= eps or fb <= eps:
        raise ValueError("gradient singular: a chord radicand vanishes")
    ra, rb = math.sqrt(fa), math.sqrt(fb)
    sa = math.sin(2 * a + 2 * g)
    sb = math.sin(2 * b + 2 * g)
    d_alpha = -2 * math.sin(a) - 2 * (math.sin(2 * a) + sa) / ra
    d_beta = -2 * math.sin(b) - 2 * (math.sin(2 * b) + sb) / rb
    s2g = math.sin(2 * g)
    d_gamma = -2 * math.sin(g) - 2 * (s2g + sa) / ra - 2 * (s2g + sb) / rb
    return d_alpha, d_beta, d_gamma


def lagrange_residual(p: PentagonParams) -> tuple[float, float]:
    """Stationarity of the perimeter on ``cos(alpha) + cos(beta) = 1/2``.

    Returns ``(dA/dgamma, dA/dalpha * sin(beta) - dA/dbeta * sin(alpha))``.
    """
    da, db, dg = gradient_closed_form(p)
    return dg, da * math.sin(p.beta) - db * math.sin(p.alpha)


# -- stationarity in (alpha, theta) ----------------------------------------

def stationarity_D(alpha, theta):
    """Numerator of ``dB/dalpha``: ``dB/dalpha * sqrt(f(alpha)) = 2 * D``."""
    alpha = np.asarray(alpha, dtype=float)
    theta = np.asarray(theta, dtype=float)
    rad = 3 + 2 * np.cos(2 * alpha) - 2 * np.cos(theta) - 2 * np.cos(2 * alpha - theta)
    out = np.sin(2 * alpha - theta) - np.sin(2 * alpha) - np.sin(alpha) * _sqrt(rad)
    return float(out) if np.ndim(out) == 0 else out


def g_curve(alpha: float) -> float:
    """Closed-form zero curve ``theta = g(alpha)`` of the stationarity function.

    Defined on ``[0, 5*pi/12]`` wherever ``16c^6 - 16c^4 + 1 >= 0`` with
    ``c = cos(alpha)``; on ``[pi/3, 5*pi/12]`` it solves ``D(alpha, theta) = 0``.
    """
    if not (0.0 <= alpha <= 5 * math.pi / 12 + 1e-15):
        raise ValueError(f"alpha={alpha!r} outside [0, 5*pi/12]")
    c = math.cos(alpha)
    rad = 16 * c ** 6 - 16 * c ** 4 + 1
    if rad < -RADICAND_CLAMP:
        raise ValueError(f"alpha={alpha!r} outside the real domain of g")
    r = math.sqrt(max(rad, 0.0))
    num = math.sin(2 * alpha) * (2 * c * math.cos(2 * alpha) + r)
    den = 8 * c ** 3 * math.sin(alpha) ** 2 - math.cos(2 * alpha) * r
    ratio = math.atan(num / den) if den != 0 else math.copysign(PI2, num)
    return alpha - ratio


def golden_section_min(fun, lo: float, hi: float, tol: float = 1e-12) -> tuple[float, float]:
    invphi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fun(c), fun(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fun(d)
    x = 0.5 * (a + b)
    return x, fun(x)


@dataclass(frozen=True)
class ExtremalConstants:
    theta0: float
    alpha0: float
    alpha_argmin: float
    tan_theta0_radical: float

    def to_dict(self):
        return {
            "theta0": self.theta0,
            "alpha0": self.alpha0,
            "alpha_argmin": self.alpha_argmin,
            "tan_theta0_radical": self.tan_theta0_radical,
        }


def alpha0_closed_form() -> float:
    return math.acos(math.sqrt(24 - 3 * math.sqrt(37)) / 6)


def tan_theta0_radical() -> float:
    s = math.sqrt(37)
    return (4 * s - 5) * math.sqrt(12 + 3 * s) / ((43 - 2 * s) * math.sqrt(24 - 3 * s))


def extremal_constants() -> ExtremalConstants:
    """Minimum ``theta0`` of ``g`` on ``[pi/3, 5*pi/12]`` and the closed-form ``alpha0``."""
    a_min, theta0 = golden_section_min(g_curve, PI3, 5 * math.pi / 12, tol=1e-12)
    return ExtremalConstants(theta0, alpha0_closed_form(), a_min, tan_theta0_radical())


def diagonal_profile(alphas) -> np.ndarray:
    """``B(alpha, alpha, g(alpha))`` sampled at ``alphas``."""
    return np.array([float(perimeter_B(a, a, g_curve(a))) for a in alphas])


# -- printed polynomials ---------------------------------------------------

_x = Polynomial([0.0, 1.0])

V3 = (_x * (_x - 1) * (_x + 1) * (_x ** 2 + 1)
      * (63 - 1028 * _x ** 2 + 1914 * _x ** 4 - 1028 * _x ** 6 + 63 * _x ** 8)
      * (3 * _x ** 2 - 1) * (_x ** 2 - 3)
      * (39 - 708 * _x ** 2 + 1322 * _x ** 4 - 708 * _x ** 6 + 39 * _x ** 8))

Z1_QUARTIC = (_x - 1) * (15 * _x ** 3 - 45 * _x ** 2 + 5 * _x + 1)


def U3(x: float, y: float) -> float:
    return 3 - x * x - y * y - 5 * x * x * y * y


def U5_factor(x: float, y: float) -> float:
    return (x * y + y - x + 1) * (x * y - y + x + 1)


def U5(x: float, y: float) -> float:
    return (x * y * (3 * x * x - 1) * (3 * y * y - 1) * (x * x - 3) * (y * y - 3)
            * (1 + x * x) * (1 + y * y) * (x + y) * (x - y) * (x * y + 1) * U5_factor(x, y))


def U4(x: float, y: float, z: float) -> float:
    return (
        y*z**4 + 48*z**3*x**5*y**3 + 9*z**2*y + 72*x*y*z + 9*x*z**2 + x*z**4 - 64*y**3*x**4
        - 178*z**2*x**3*y**4 - 64*x**3*y**4 + 64*x**3*y**2 + 64*y**3*x**2 + 9*y**5*z**2
        + 2*y**3*z**4 - 14*y**3*z**2 - 16*z**3*y**2 + y**5*z**4 + 2*x**3*z**4 + x**5*z**4
        - 14*x**3*z**2 + 9*x**5*z**2 - 16*z**3*x**2 + 16*z**3*x**4 + 16*z**3*y**4
        - z**4*x**5*y**6 - z**4*x**5*y**4 - 2*z**4*x**3*y**6 - z**4*x*y**6 + 62*z**4*x**3*y**4
        - z**4*x*y**4 - 62*z**4*x**3*y**2 + z**4*x**5*y**2 + z**4*x*y**2 - z**4*y*x**4
        - z**4*y*x**6 + z**4*y*x**2 - z**4*y**5*x**4 - 62*z**4*y**3*x**2 + 62*z**4*y**3*x**4
        + z**4*y**5*x**2 - z**4*y**5*x**6 - 2*z**4*y**3*x**6
        - 8*z**3*x**5*y**5 + 48*z**3*x**3*y**5 - 8*z**3*x*y**5 + 48*z**3*x**3*y
        + 48*z**3*x*y**3 - 32*z**3*x**3*y**3 - 8*z**3*x**5*y - 8*z**3*x*y
        + 288*z**3*y**4*x**4 + 16*z**3*y**6*x**2 - 16*z**3*y**6*x**4 + 288*z**3*x**2*y**2
        - 288*z**3*x**4*y**2 + 16*z**3*x**6*y**2 - 288*z**3*x**2*y**4 - 16*z**3*y**4*x**6
        - 9*z**2*x**5*y**6 + 151*z**2*x**5*y**4 + 14*z**2*x**3*y**6 - 9*z**2*x*y**6
        + 151*z**2*x*y**4 + 178*z**2*x**3*y**2 - 151*z**2*x**5*y**2 - 151*z**2*x*y**2
        + 151*z**2*y*x**4 - 9*z**2*y*x**6 - 151*z**2*y*x**2 + 151*z**2*y**5*x**4
        + 178*z**2*y**3*x**2 - 178*z**2*y**3*x**4 - 151*z**2*y**5*x**2 - 9*z**2*y**5*x**6
        + 14*z**2*y**3*x**6 + 72*z*x**5*y**5 - 112*z*x**3*y**5 + 72*z*x*y**5
        - 112*z*x**3*y - 112*z*x*y**3 + 32*z*x**3*y**3 - 112*z*x**5*y**3 + 72*z*x**5*y
        + 64*z*y**4*x**4 + 64*z*x**2*y**2 - 64*z*x**4*y**2 - 64*z*x**2*y**4
    )


def v3_roots(lo: float = 1 / math.sqrt(3), hi: float = math.sqrt(3 / 5)) -> list[float]:
    return roots_in(isolate_real_roots(V3, -10.0, 10.0), lo, hi)


def z1_quartic_roots() -> list[float]:
    return isolate_real_roots(Z1_QUARTIC, -10.0, 10.0)


# -- critical points -------------------------------------------------------

class CriticalKind(str, Enum):
    case1_interior = "case1_interior"
    case2_boundary_omega1 = "case2_boundary_omega1"
    boundary_other = "boundary_other"


@dataclass(frozen=True)
class CriticalPoint:
    params: PentagonParams
    perimeter: float
    kind: CriticalKind
    substitution: tuple[float, float, float]
    residuals: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "params": self.params.to_dict(),
            "perimeter": self.perimeter,
            "kind": self.kind.value,
            "substitution": list(self.substitution),
            "residuals": dict(self.residuals),
        }


def _residuals(p: PentagonParams) -> dict:
    x, y, z = p.substitution()
    e1, e2 = lagrange_residual(p)
    return {
        "U3": U3(x, y),
        "U4": U4(x, y, z),
        "U5_factor": U5_factor(x, y),
        "lagrange_gamma": e1,
        "lagrange_alpha_beta": e2,
    }


def _critical_point(p: PentagonParams, kind: CriticalKind) -> CriticalPoint:
    return CriticalPoint(p, perimeter_closed_form(p), kind, p.substitution(), _residuals(p))


def case1_critical_points() -> list[CriticalPoint]:
    """Critical points with ``alpha = beta`` on ``cos(alpha) + cos(beta) = 1/2``.

    ``x = y = sqrt(3/5)`` and ``z = sqrt(15) * z1`` for every root ``z1`` of the
    quartic with ``z >= sqrt(3)`` (i.e. ``gamma >= pi/3``).
    """
    x = math.sqrt(3 / 5)
    out = []
    for z1 in z1_quartic_roots():
        if z1 < 1 / math.sqrt(5) - 1e-12:
            continue
        p = PentagonParams.from_substitution(x, x, math.sqrt(15) * z1)
        out.append(_critical_point(p, CriticalKind.case2_boundary_omega1))
    return out


def _beta_on_slice(alpha: float) -> float:
    return math.acos(0.5 - math.cos(alpha))


def _slice_residual(q: np.ndarray) -> np.ndarray:
    a, g = float(q[0]), float(q[1])
    return np.array(lagrange_residual(PentagonParams(a, _beta_on_slice(a), g)))


def _in_slice_domain(a: float, g: float, margin: float = 0.0) -> bool:
    return PI3 + margin < a < PI2 - margin and PI3 - 1e-12 <= g < PI2


def _newton(q0: np.ndarray, tol: float = 1e-13, max_iter: int = 60) -> Optional[np.ndarray]:
    q = np.array(q0, dtype=float)
    h = 1e-7
    try:
        r = _slice_residual(q)
        for _ in range(max_iter):
            nr = float(np.hypot(*r))
            if nr <= tol:
                return q
            J = np.empty((2, 2))
            for j in range(2):
                dq = np.zeros(2)
                dq[j] = h
                J[:, j] = (_slice_residual(q + dq) - _slice_residual(q - dq)) / (2 * h)
            step = np.linalg.solve(J, -r)
            lam = 1.0
            while lam > 1e-6:
                cand = q + lam * step
                if _in_slice_domain(cand[0], cand[1], 1e-9):
                    rc = _slice_residual(cand)
                    if np.hypot(*rc) < nr:
                        q, r = cand, rc
                        break
                lam *= 0.5
            else:
                return q if nr <= 1e-10 else None
        return q if float(np.hypot(*r)) <= 1e-10 else None
    except (ValueError, np.linalg.LinAlgError):
        return None


def case2_critical_points(n_alpha: int = 24, n_gamma: int = 24,
                          dedup_tol: float = 1e-7) -> list[CriticalPoint]:
    """Interior critical points of the perimeter on the slice ``cos(alpha) + cos(beta) = 1/2``.

    ``beta`` is eliminated through the constraint and the two stationarity
    equations in ``(alpha, gamma)`` are solved by damped Newton from a
    deterministic grid of starts; ``gamma`` is restricted to ``[pi/3, pi/2)``.
    """
    found: list[np.ndarray] = []
    alphas = np.linspace(PI3, PI2, n_alpha + 2)[1:-1]
    gammas = np.linspace(PI3, PI2, n_gamma + 1)[:-1] + 0.5 * (PI2 - PI3) / n_gamma
    for a in alphas:
        for g in gammas:
            q = _newton(np.array([a, g]))
            if q is None or not _in_slice_domain(q[0], q[1]):
                continue
            if all(np.max(np.abs(q - f)) > dedup_tol for f in found):
                found.append(q)
    found.sort(key=lambda q: (q[0], q[1]))
    return [_critical_point(PentagonParams(q[0], _beta_on_slice(q[0]), q[1]),
                            CriticalKind.case2_boundary_omega1) for q in found]


# -- minimum over the feasible set -----------------------------------------

EQUALITY_PATTERNS = ("regular_triangle", "triangle_B_eq_C", "triangle_B_eq_A",
                     "quadrangle_E_eq_F", "special_pentagon")


def equality_pattern(p: PentagonParams, tol: float = 1e-4) -> Optional[str]:
    """Name of the perimeter-3 configuration ``p`` matches within ``tol``, if any."""
    t = np.array(p.as_tuple())
    fixed = {
        "regular_triangle": (PI3, PI3, PI3),
        "triangle_B_eq_C": (PI3, PI2, PI3),
        "triangle_B_eq_A": (PI2, PI3, PI3),
        "special_pentagon": (ARCCOS_QUARTER,) * 3,
    }
    for name, ref in fixed.items():
        if np.max(np.abs(t - np.array(ref))) <= tol:
            return name
    if abs(p.gamma - PI2) <= tol and abs(p.u + p.v - 0.5) <= tol:
        return "quadrangle_E_eq_F"
    return None


@dataclass(frozen=True)
class OmegaMinimum:
    min_perimeter: float
    argmin: PentagonParams
    minimizers: list = field(default_factory=list)

    def to_dict(self):
        return {
            "min_perimeter": self.min_perimeter,
            "argmin": self.argmin.to_dict(),
            "minimizers": [{"params": p.to_dict(), "perimeter": v, "pattern": pat}
                           for p, v, pat in self.minimizers],
        }


def _project_omega(q: np.ndarray) -> np.ndarray:
    a, b, g = np.clip(q, PI3, PI2)
    if math.cos(a) + math.cos(b) < 0.5:
        b = _beta_on_slice(a) if math.cos(a) <= 0.5 else PI3
    return np.array([a, b, g])


def verify_min_over_omega(grid_n: int = 60, refine_tol: float = 1e-6) -> OmegaMinimum:
    """Global minimum of the perimeter over the feasible set by grid search plus local refinement.

    The perimeter is evaluated on a ``grid_n^3`` grid of the box, infeasible
    cells masked out; every grid cell that is a local minimum of its
    3x3x3 neighbourhood seeds a bound- and constraint-aware SLSQP refinement.
    Refined points within ``refine_tol`` of the best value are reported as
    minimizers together with their equality pattern.
    """
    if grid_n < 20:
        raise ValueError("grid_n must be at least 20")
    s = np.linspace(PI3, PI2, grid_n)
    a, b, g = np.meshgrid(s, s, s, indexing="ij")
    vals = perimeter_A(a, b, g)
    vals = np.where(np.cos(a) + np.cos(b) >= 0.5 - 1e-12, vals, np.inf)
    seeds = np.argwhere((vals == minimum_filter(vals, size=3, mode="nearest")) & np.isfinite(vals))

    def obj(q):
        return float(perimeter_A(*np.clip(q, PI3, PI2)))

    cons = [{"type": "ineq", "fun": lambda q: math.cos(q[0]) + math.cos(q[1]) - 0.5}]
    refined = []
    for i, j, k in seeds:
        res = minimize(obj, [s[i], s[j], s[k]], method="SLSQP", bounds=[(PI3, PI2)] * 3,
                       constraints=cons, options={"ftol": 1e-15, "maxiter": 500})
        q = _project_omega(res.x)
        refined.append((obj(q), tuple(q)))
    refined.sort()
    best_val, best_q = refined[0]
    minimizers = []
    for val, q in refined:
        if val <= best_val + refine_tol:
            p = PentagonParams(*q)
            minimizers.append((p, val, equality_pattern(p)))
    return OmegaMinimum(best_val, PentagonParams(*best_q), minimizers)
