"""Divided differences of truncated power functions, and B-splines.

For knots a_0..a_n (order matters nowhere; repeats are allowed) and a shift y,
the two quantities computed here are the n-th order divided differences of

    (x - y)_+^(n-1)    and    (x - y)_-^n,

where x_+^k is x^k for x > 0 and 0 otherwise, and x_-^k is x^k for x < 0 and
0 otherwise.  Both are evaluated with the de Boor / Varsi recurrence: split
the knots into b's (below y) and c's (at or above y), so every denominator
c_l - b_k is positive and coincident knots cost nothing.  The classical
rational formula for distinct knots is provided as well; it is mainly useful
as a cross-check since it degrades badly near coincident knots.
"""
from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

KNOT_DISTINCT_TOL = 1e-10


def _as_knots(knots) -> np.ndarray:
    a = np.asarray(knots, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise ValueError("need a flat vector of at least 2 knots")
    if not np.all(np.isfinite(a)):
        raise ValueError("knots must be finite")
    return a


def _split(a: np.ndarray, y: float):
    below = a < y
    return a[below], a[~below]


def tp_plus_dd(knots: Sequence[float], y):
    """Divided difference of (x - y)_+^(n-1) over the n+1 given knots.

    y may be a scalar or an array of shifts.  Returns 0 when y lies outside
    the closed knot hull.
    """
    a = _as_knots(knots)
    if np.isscalar(y) or np.ndim(y) == 0:
        b, c = _split(a, float(y))
        return _plus_rec(list(b), list(c), float(y))
    return _dd_grid(a, np.asarray(y, dtype=float), minus=False)


def tp_minus_dd(knots: Sequence[float], y):
    """Divided difference of (x - y)_-^n over the n+1 given knots.

    y may be a scalar or an array.  Equals 0 for y at or below every knot and
    1 for y above every knot.
    """
    a = _as_knots(knots)
    if np.isscalar(y) or np.ndim(y) == 0:
        b, c = _split(a, float(y))
        return _minus_rec(list(b), list(c), float(y))
    return _dd_grid(a, np.asarray(y, dtype=float), minus=True)


def _plus_rec(b: list, c: list, y: float) -> float:
    r, s = len(b), len(c)
    if r == 0 or s == 0:
        return 0.0
    # flat length-(s+1) table; entry j holds alpha_{k,j} for the current row k
    A = [0.0] * (s + 1)
    A[1] = 1.0 / (c[0] - b[0])
    for j in range(2, s + 1):
        A[j] = (y - b[0]) * A[j - 1] / (c[j - 1] - b[0])
    for k in range(2, r + 1):
        bk = b[k - 1]
        for j in range(1, s + 1):
            A[j] = ((c[j - 1] - y) * A[j] + (y - bk) * A[j - 1]) / (c[j - 1] - bk)
    return A[s]


def _minus_rec(b: list, c: list, y: float) -> float:
    r, s = len(b), len(c)
    if r == 0:
        return 0.0
    if s == 0:
        return 1.0
    A = [0.0] * (s + 1)
    A[0] = 1.0
    for k in range(1, r + 1):
        bk = b[k - 1]
        for j in range(1, s + 1):
            A[j] = ((c[j - 1] - y) * A[j] + (y - bk) * A[j - 1]) / (c[j - 1] - bk)
    return A[s]


def _dd_grid(knots: np.ndarray, ys: np.ndarray, minus: bool) -> np.ndarray:
    """Vectorized recurrence over a vector of shifts.

    All y falling between the same pair of sorted knots share one b/c split,
    so the table updates run on whole buckets at once.
    """
    ks = np.sort(knots)
    flat = ys.ravel()
    out = np.empty(flat.shape)
    counts = np.searchsorted(ks, flat, side="left")  # knots strictly below y
    for r in np.unique(counts):
        sel = counts == r
        yv = flat[sel]
        b, c = ks[:r], ks[r:]
        s = c.size
        if r == 0:
            out[sel] = 0.0
        elif s == 0:
            out[sel] = 1.0 if minus else 0.0
        else:
            A = [np.zeros(yv.shape) for _ in range(s + 1)]
            if minus:
                A[0] = np.ones(yv.shape)
                first = 1
            else:
                A[1] = np.full(yv.shape, 1.0 / (c[0] - b[0]))
                for j in range(2, s + 1):
                    A[j] = (yv - b[0]) * A[j - 1] / (c[j - 1] - b[0])
                first = 2
            for k in range(first, r + 1):
                bk = b[k - 1]
                for j in range(1, s + 1):
                    A[j] = ((c[j - 1] - yv) * A[j] + (yv - bk) * A[j - 1]) / (c[j - 1] - bk)
            out[sel] = A[s]
    return out.reshape(ys.shape)


def bspline(knots: Sequence[float], t):
    """Normalized B-spline density with the given n+1 knots, evaluated at t.

    Nonnegative, supported on the knot hull, and integrating to 1.  t may be
    a scalar or an array.
    """
    a = _as_knots(knots)
    n = a.size - 1
    return n * tp_plus_dd(a, t)


def _require_distinct(a: np.ndarray) -> None:
    srt = np.sort(a)
    if np.min(np.diff(srt)) <= KNOT_DISTINCT_TOL:
        raise ValueError("knots are not pairwise distinct (gap <= "
                         f"{KNOT_DISTINCT_TOL:g}); use the recurrence form instead")


def tp_dd_distinct(knots: Sequence[float], y: float, variant: str = "plus",
                   degree: int | None = None) -> float:
    """Rational-formula divided difference of a truncated power at distinct knots.

    variant "plus" uses (x-y)_+^degree, "minus" uses (x-y)_-^degree; degree
    defaults to n-1 for plus and n for minus, matching the recurrences.
    """
    a = _as_knots(knots)
    _require_distinct(a)
    n = a.size - 1
    if degree is None:
        degree = n - 1 if variant == "plus" else n
    if variant == "plus":
        def g(x):
            return x ** degree if x > 0 else 0.0
    elif variant == "minus":
        def g(x):
            return x ** degree if x < 0 else 0.0
    else:
        raise ValueError(f"variant must be 'plus' or 'minus', got {variant!r}")
    return dd_generic(lambda x: g(x - y), a)


def dd_generic(f: Callable[[float], float], knots: Sequence[float]) -> float:
    """Divided difference of an arbitrary function at pairwise distinct knots,

        sum_i f(a_i) / prod_{j != i} (a_i - a_j).
    """
    a = _as_knots(knots)
    _require_distinct(a)
    diffs = np.subtract.outer(a, a)
    np.fill_diagonal(diffs, 1.0)
    denoms = np.prod(diffs, axis=1)
    return float(sum(f(float(ai)) / d for ai, d in zip(a, denoms)))
