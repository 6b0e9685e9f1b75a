"""Real root isolation for small univariate polynomials by sign changes and bisection."""

from __future__ import annotations

import numpy as np
from numpy.polynomial import Polynomial


def _bisect(p, a: float, b: float, fa: float, tol: float) -> float:
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = p(m)
        if fm == 0:
            return m
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def isolate_real_roots(p: Polynomial, lo: float = -10.0, hi: float = 10.0,
                       step: float = 1e-3, tol: float = 1e-12) -> list[float]:
    """Real roots of ``p`` in ``[lo, hi]``, refined to width ``tol``.

    The interval is scanned on a grid of spacing ``step``; every sign
    change is refined by bisection and exact grid zeros are kept as is.
    Roots of even multiplicity and pairs closer than ``step`` are not
    detected, which is acceptable for the low-degree factored
    polynomials this is used on.
    """
    n = int(np.ceil((hi - lo) / step))
    grid = np.linspace(lo, hi, n + 1)
    vals = p(grid)
    roots = []
    for i in range(n):
        a, b = grid[i], grid[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0:
            roots.append(float(a))
        elif fb != 0 and (fa < 0) != (fb < 0):
            roots.append(_bisect(p, float(a), float(b), float(fa), tol))
    if vals[-1] == 0:
        roots.append(float(grid[-1]))
    return roots


def roots_in(roots, lo: float, hi: float, slack: float = 1e-9) -> list[float]:
    return [r for r in roots if lo - slack <= r <= hi + slack]
