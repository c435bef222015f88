"""Shared numerical helpers: vectorized bracketed bisection and
Richardson-extrapolated derivatives."""

from __future__ import annotations

import numpy as np

from .errors import EvaluationError

#: absolute x-resolution target for quantile bisection
BISECT_XTOL = 1e-12


def invert_increasing(fn, targets, lo: float, hi: float, *, xtol: float = BISECT_XTOL,
                      max_growth: int = 200):
    """Invert a nondecreasing scalar-or-vector function by bisection.

    ``fn`` must accept an ndarray and return an ndarray of the same shape.
    The bracket [lo, hi] is grown geometrically until it spans all targets,
    then every target is bisected simultaneously down to an interval of
    width max(xtol, a few ulps at the bracket scale).
    """
    t = np.atleast_1d(np.asarray(targets, dtype=float))
    lo = float(lo)
    hi = float(hi)
    if not hi > lo:
        raise EvaluationError("empty starting bracket")

    tmin = float(np.min(t))
    tmax = float(np.max(t))
    for _ in range(max_growth):
        if float(np.asarray(fn(np.array([lo])))[0]) <= tmin:
            break
        lo = lo - max(1.0, abs(lo)) if lo <= 0 else lo * 0.5
    else:
        raise EvaluationError("bracket growth failed on the left")
    for _ in range(max_growth):
        if float(np.asarray(fn(np.array([hi])))[0]) >= tmax:
            break
        hi = hi + max(1.0, abs(hi)) if hi <= 0 else hi * 2.0
    else:
        raise EvaluationError("bracket growth failed on the right")

    a = np.full_like(t, lo)
    b = np.full_like(t, hi)
    # enough halvings to hit xtol or the floating floor of the bracket
    span = hi - lo
    floor = max(xtol, 4.0 * np.finfo(float).eps * max(abs(lo), abs(hi), 1.0))
    n_iter = int(np.ceil(np.log2(max(span / floor, 2.0)))) + 2
    for _ in range(min(n_iter, 200)):
        mid = 0.5 * (a + b)
        high = np.asarray(fn(mid)) >= t
        b = np.where(high, mid, b)
        a = np.where(high, a, mid)
    out = 0.5 * (a + b)
    return out if np.ndim(targets) else float(out[0])


def richardson_derivative(fn, x, *, rel_step: float = 1e-4):
    """Central finite difference with one Richardson extrapolation step
    (two step sizes h and h/2), vectorized over x."""
    x = np.asarray(x, dtype=float)
    h = rel_step * np.maximum(1.0, np.abs(x))
    d1 = (fn(x + h) - fn(x - h)) / (2.0 * h)
    h2 = 0.5 * h
    d2 = (fn(x + h2) - fn(x - h2)) / (2.0 * h2)
    return (4.0 * d2 - d1) / 3.0
