"""Winding numbers of sampled planar loops about the origin."""

import math

import numpy as np

from ..errors import DegenerateLoopError, StructuralError, UndersampledError
from ..unimodular import apply_ops
from . import kernels
from .maps import Circle, eval_row_map

ORIGIN_TOL = 1e-12
MAX_STEP = math.pi / 2
RESIDUAL_TOL = 1e-6


def winding_report(loop, origin_tol=ORIGIN_TOL, max_step=MAX_STEP, residual_tol=RESIDUAL_TOL):
    """``{"winding", "residual", "min_norm"}`` for an ordered closed loop in R^2 - {0}."""
    xy = np.asarray(loop, dtype=np.float64)
    if xy.ndim != 2 or xy.shape[1] != 2 or len(xy) < 1:
        raise StructuralError("loop must be a non-empty list of planar points")
    norms = kernels.row_norms(xy)
    min_norm = float(norms.min())
    if min_norm <= origin_tol:
        k = int(np.argmin(norms))
        raise DegenerateLoopError(f"loop passes within {origin_tol} of the origin at index {k}")
    inc = kernels.angle_increments(xy)
    worst = float(np.abs(inc).max())
    if worst >= max_step:
        k = int(np.argmax(np.abs(inc)))
        raise UndersampledError(
            f"angular step {worst:.3f} rad at index {k} exceeds {max_step:.3f}; use a denser sample"
        )
    turns = float(inc.sum()) / (2.0 * math.pi)
    k = int(round(turns))
    residual = abs(turns - k)
    if residual >= residual_tol:
        raise UndersampledError(f"winding residual {residual} exceeds {residual_tol}")
    return {"winding": k, "residual": residual, "min_norm": min_norm}


def winding_number(loop, **kw):
    return winding_report(loop, **kw)["winding"]


def elementary_action_preserves_winding(row, f, sample, ctx):
    """Windings of ``row`` and ``row * prod(f)`` on a circle sample."""
    if not isinstance(sample.generator, Circle):
        raise StructuralError("winding comparison needs a circle sample")
    if len(row) != 2 or f.n != 2:
        raise StructuralError("winding comparison needs a pair and a size-2 factorization")
    row = ctx.elements(row)
    after = apply_ops(row, f.ops, ctx)
    w0 = winding_number(eval_row_map(row, sample).values)
    w1 = winding_number(eval_row_map(after, sample).values)
    return w0, w1
