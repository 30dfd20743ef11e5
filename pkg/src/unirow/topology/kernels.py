"""Hot loops for the sampled topology checks.

Each kernel has a pure-numpy version and a numba ``@njit`` version with the
same signature.  The numba path is used when numba imports and
``UNIROW_DISABLE_NUMBA`` is unset (or ``0``); set it to ``1`` to force numpy.
"""

import math
import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

_flag = os.environ.get("UNIROW_DISABLE_NUMBA", "").strip().lower()
NUMBA_AVAILABLE = njit is not None
USE_NUMBA = NUMBA_AVAILABLE and _flag not in ("1", "true", "yes", "on")


# ---------------------------------------------------------------- numpy path


def eval_terms_numpy(points, exps, coefs):
    """Sum of ``coefs[t] * prod(points[:, k] ** exps[t, k])`` for each point."""
    if exps.shape[0] == 0:
        return np.zeros(points.shape[0])
    powers = np.prod(points[:, None, :] ** exps[None, :, :], axis=2)
    return powers @ coefs


def homotopy_min_norm_numpy(f, g, steps):
    """Minimum of ``|(1 - t) f + t g|`` over points and ``t = k / steps``."""
    t = np.arange(steps + 1, dtype=np.float64)[:, None, None] / steps
    h = (1.0 - t) * f[None] + t * g[None]
    return float(np.sqrt((h * h).sum(axis=2)).min())


def angle_increments_numpy(xy):
    """Signed angles between consecutive points of a closed loop (last -> first included)."""
    nxt = np.roll(xy, -1, axis=0)
    cross = xy[:, 0] * nxt[:, 1] - xy[:, 1] * nxt[:, 0]
    dot = xy[:, 0] * nxt[:, 0] + xy[:, 1] * nxt[:, 1]
    return np.arctan2(cross, dot)


def row_norms_numpy(values):
    return np.sqrt((values * values).sum(axis=1))


# ---------------------------------------------------------------- numba path


def _eval_terms_loop(points, exps, coefs):
    n, m = points.shape
    nterms = exps.shape[0]
    out = np.zeros(n)
    for p in range(n):
        total = 0.0
        for t in range(nterms):
            term = coefs[t]
            for k in range(m):
                x = points[p, k]
                for _ in range(exps[t, k]):
                    term *= x
            total += term
        out[p] = total
    return out


def _homotopy_min_norm_loop(f, g, steps):
    n, d = f.shape
    best = math.inf
    for s in range(steps + 1):
        t = s / steps
        for p in range(n):
            acc = 0.0
            for k in range(d):
                h = (1.0 - t) * f[p, k] + t * g[p, k]
                acc += h * h
            if acc < best:
                best = acc
    return math.sqrt(best)


def _angle_increments_loop(xy):
    n = xy.shape[0]
    out = np.empty(n)
    for p in range(n):
        q = (p + 1) % n
        cross = xy[p, 0] * xy[q, 1] - xy[p, 1] * xy[q, 0]
        dot = xy[p, 0] * xy[q, 0] + xy[p, 1] * xy[q, 1]
        out[p] = math.atan2(cross, dot)
    return out


def _row_norms_loop(values):
    n, d = values.shape
    out = np.empty(n)
    for p in range(n):
        acc = 0.0
        for k in range(d):
            acc += values[p, k] * values[p, k]
        out[p] = math.sqrt(acc)
    return out


if NUMBA_AVAILABLE:
    eval_terms_numba = njit(cache=True)(_eval_terms_loop)
    homotopy_min_norm_numba = njit(cache=True)(_homotopy_min_norm_loop)
    angle_increments_numba = njit(cache=True)(_angle_increments_loop)
    row_norms_numba = njit(cache=True)(_row_norms_loop)
else:  # pragma: no cover
    eval_terms_numba = _eval_terms_loop
    homotopy_min_norm_numba = _homotopy_min_norm_loop
    angle_increments_numba = _angle_increments_loop
    row_norms_numba = _row_norms_loop

BACKENDS = {
    "numpy": {
        "eval_terms": eval_terms_numpy,
        "homotopy_min_norm": homotopy_min_norm_numpy,
        "angle_increments": angle_increments_numpy,
        "row_norms": row_norms_numpy,
    },
    "numba": {
        "eval_terms": eval_terms_numba,
        "homotopy_min_norm": homotopy_min_norm_numba,
        "angle_increments": angle_increments_numba,
        "row_norms": row_norms_numba,
    },
}

BACKEND = "numba" if USE_NUMBA else "numpy"


def _active(name):
    return BACKENDS[BACKEND][name]


def eval_terms(points, exps, coefs):
    points = np.ascontiguousarray(points, dtype=np.float64)
    exps = np.ascontiguousarray(exps, dtype=np.int64).reshape(-1, points.shape[1])
    coefs = np.ascontiguousarray(coefs, dtype=np.float64)
    return _active("eval_terms")(points, exps, coefs)


def homotopy_min_norm(f, g, steps):
    f = np.ascontiguousarray(f, dtype=np.float64)
    g = np.ascontiguousarray(g, dtype=np.float64)
    return float(_active("homotopy_min_norm")(f, g, int(steps)))


def angle_increments(xy):
    return _active("angle_increments")(np.ascontiguousarray(xy, dtype=np.float64))


def row_norms(values):
    return _active("row_norms")(np.ascontiguousarray(values, dtype=np.float64))
