"""Reflections, the non-antipodal rotation built from one, and the common witness."""

import numpy as np

from ..errors import AntipodalError, StructuralError


def _vec(v):
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1:
        raise StructuralError("expected a 1-d vector")
    return v


def reflection(w, v):
    """``v - 2 <v, w> / <w, w> * w``."""
    w, v = _vec(w), _vec(v)
    if w.shape != v.shape:
        raise StructuralError("w and v must have the same length")
    ww = float(w @ w)
    if ww == 0.0:
        raise StructuralError("reflection about the zero vector is undefined")
    return v - 2.0 * float(v @ w) / ww * w


def reflection_matrix(w):
    w = _vec(w)
    ww = float(w @ w)
    if ww == 0.0:
        raise StructuralError("reflection about the zero vector is undefined")
    return np.eye(len(w)) - 2.0 * np.outer(w, w) / ww


def _check_unit(v, tol):
    if abs(float(np.linalg.norm(v)) - 1.0) > tol:
        raise StructuralError(f"expected a unit vector, |v| = {np.linalg.norm(v)}")


def rotation_between(v0, vt, tol=1e-9):
    """Orthogonal ``alpha = -sigma_{v0 + vt}`` with ``alpha v0 = vt``.

    Fails when ``v0`` and ``vt`` are antipodal.
    """
    v0, vt = _vec(v0), _vec(vt)
    if v0.shape != vt.shape:
        raise StructuralError("v0 and vt must have the same length")
    _check_unit(v0, tol)
    _check_unit(vt, tol)
    w = v0 + vt
    if float(np.linalg.norm(w)) <= tol:
        raise AntipodalError("v0 and vt are antipodal; no reflection sends one to minus the other")
    return -reflection_matrix(w)


def vaserstein_midpoint(v0, vt, tol=1e-9):
    """``W = (v0 + vt) / (1 + v0 . vt)``, so that ``v0 . W = vt . W = 1``."""
    v0, vt = _vec(v0), _vec(vt)
    if v0.shape != vt.shape:
        raise StructuralError("v0 and vt must have the same length")
    _check_unit(v0, tol)
    _check_unit(vt, tol)
    w = v0 + vt
    # for unit vectors 1 + v0 . vt = |v0 + vt|^2 / 2; the right side avoids
    # cancellation when the inputs are nearly antipodal
    denom = 0.5 * float(w @ w)
    if denom <= tol:
        raise AntipodalError("v0 . vt = -1: antipodal inputs have no common witness")
    return w / denom
