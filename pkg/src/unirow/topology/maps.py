"""Sampled real varieties and the maps that rows of polynomials induce on them."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from ..errors import ContextMismatch, MembershipError, StructuralError, VanishingError
from ..rings import Polynomial, RingContext
from ..unimodular import apply_ops, factorization_path
from . import kernels

MEMBERSHIP_TOL = 1e-9
NONVANISHING_TOL = 1e-9


@dataclass(frozen=True)
class Circle:
    n_samples: int


@dataclass(frozen=True)
class Sphere2:
    n_lat: int = 33
    n_lon: int = 64


@dataclass(frozen=True)
class Explicit:
    points: tuple


@dataclass(frozen=True, eq=False)
class VarietySample:
    points: np.ndarray
    generator: object
    variables: tuple
    membership_tol: float = MEMBERSHIP_TOL


@dataclass(frozen=True, eq=False)
class MapTrace:
    row: tuple
    points: np.ndarray
    values: np.ndarray
    min_norm: float
    variables: tuple = ()


def poly_arrays(p):
    """``(exps, coefs)`` arrays for the kernels."""
    m = p.nvars
    if not p.terms:
        return np.zeros((0, m), dtype=np.int64), np.zeros(0)
    exps = np.array(list(p.terms.keys()), dtype=np.int64).reshape(-1, m)
    coefs = np.array([float(c) for c in p.terms.values()])
    return exps, coefs


def eval_on_points(p, points):
    exps, coefs = poly_arrays(p)
    return kernels.eval_terms(points, exps, coefs)


def _circle_modulus(variables):
    x, y = (Polynomial.var(variables, v) for v in variables)
    return x * x + y * y - 1


def _sphere_modulus(variables):
    x, y, z = (Polynomial.var(variables, v) for v in variables)
    return x * x + y * y + z * z - 1


def _circle_points(n):
    theta = 2.0 * np.pi * np.arange(n) / n
    return np.column_stack([np.cos(theta), np.sin(theta)])


def _sphere_points(n_lat, n_lon):
    pts = [(0.0, 0.0, 1.0)]
    for i in range(1, n_lat - 1):
        th = math.pi * i / (n_lat - 1)
        for k in range(n_lon):
            ph = 2.0 * math.pi * k / n_lon
            pts.append((math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)))
    pts.append((0.0, 0.0, -1.0))
    return np.array(pts)


def sample_variety(generator, ctx, membership_tol=MEMBERSHIP_TOL):
    """Points of the real variety of ``ctx``.

    Circle and sphere samples use the trigonometric parameterization (a closed
    loop for the circle).  Explicit points are checked against the modulus.
    """
    if isinstance(generator, Circle):
        if len(ctx.variables) != 2 or not ctx.is_quotient or (
            ctx.modulus != _circle_modulus(ctx.variables)
        ):
            raise ContextMismatch(f"a circle sample needs Q[x,y]/(x^2 + y^2 - 1), got {ctx}")
        if generator.n_samples < 3:
            raise StructuralError("a circle sample needs at least 3 points")
        points = _circle_points(generator.n_samples)
    elif isinstance(generator, Sphere2):
        if len(ctx.variables) != 3 or not ctx.is_quotient or (
            ctx.modulus != _sphere_modulus(ctx.variables)
        ):
            raise ContextMismatch(f"a sphere sample needs Q[x,y,z]/(x^2 + y^2 + z^2 - 1), got {ctx}")
        if generator.n_lat < 3 or generator.n_lon < 3:
            raise StructuralError("sphere grid needs n_lat, n_lon >= 3")
        points = _sphere_points(generator.n_lat, generator.n_lon)
    elif isinstance(generator, Explicit):
        points = np.asarray(generator.points, dtype=np.float64)
        if points.ndim != 2 or points.shape[1] != len(ctx.variables):
            raise StructuralError(f"explicit points must have {len(ctx.variables)} coordinates")
    else:
        raise StructuralError(f"unknown generator {generator!r}")
    if ctx.is_quotient:
        resid = np.abs(eval_on_points(ctx.modulus, points))
        bad = np.nonzero(resid > membership_tol)[0]
        if bad.size:
            raise MembershipError([tuple(points[k]) for k in bad])
    return VarietySample(points, generator, tuple(ctx.variables), membership_tol)


def _row_values(row, points, variables):
    for p in row:
        if p.variables != tuple(variables):
            raise ContextMismatch(f"row entry over {p.variables}, sample over {variables}")
    return np.column_stack([eval_on_points(p, points) for p in row])


def eval_row_map(row, sample):
    """Evaluate each row entry at every sample point; records the minimum norm."""
    row = tuple(row)
    values = _row_values(row, sample.points, sample.variables)
    norms = kernels.row_norms(values)
    return MapTrace(row, sample.points, values, float(norms.min()), sample.variables)


def normalize_to_sphere(trace, tol=NONVANISHING_TOL):
    """Radial projection ``x -> x / |x|`` of every value."""
    if not trace.min_norm > tol:
        raise VanishingError("trace vanishes somewhere; cannot normalize")
    norms = kernels.row_norms(trace.values)
    values = trace.values / norms[:, None]
    return MapTrace(trace.row, trace.points, values, float(kernels.row_norms(values).min()),
                    trace.variables)


def straight_line_homotopy_check(f, g, steps, tol=NONVANISHING_TOL):
    """Is ``(1 - t) f + t g`` nonvanishing on the sample for ``t = 0, 1/steps, ..., 1``?"""
    if steps < 2:
        raise StructuralError("steps must be >= 2")
    if f.values.shape != g.values.shape or not np.array_equal(f.points, g.points):
        raise StructuralError("traces must share the sample and target dimension")
    m = kernels.homotopy_min_norm(f.values, g.values, steps)
    return m > tol, m


def elementary_path_check(row, f, ctx, sample, steps=100, tol=NONVANISHING_TOL, parameter="t"):
    """Minimum of ``|a sigma(t)|`` over the sample and a ``t`` grid on [0, 1].

    ``sigma(t)`` replaces every shear ``lam`` by ``lam t``; returns ``(ok, min)``.
    """
    if steps < 2:
        raise StructuralError("steps must be >= 2")
    ext, path = factorization_path(f, ctx, parameter)
    moving = apply_ops([ctx.element(a).embed(ext.variables) for a in row], path.ops, ext)
    pts = sample.points
    ts = np.arange(steps + 1, dtype=np.float64) / steps
    grid = np.column_stack([np.repeat(pts, len(ts), axis=0), np.tile(ts, len(pts))])
    values = np.column_stack([eval_on_points(p, grid) for p in moving])
    m = float(kernels.row_norms(values).min())
    return m > tol, m


def vector_field_report(field, sample):
    """Minimum norm of a candidate field on the sample and its largest radial part.

    A report, not a proof: small ``min_norm`` flags a (near) zero of the field.
    """
    trace = eval_row_map(field, sample)
    radial = np.abs((trace.values * sample.points).sum(axis=1))
    return {"min_norm": trace.min_norm, "max_radial": float(radial.max())}


def trace_to_csv(trace):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    vals = [f"value{k + 1}" for k in range(trace.values.shape[1])]
    w.writerow(list(trace.variables) + vals + ["norm"])
    norms = kernels.row_norms(trace.values)
    for p, v, r in zip(trace.points, trace.values, norms):
        w.writerow([repr(float(x)) for x in p] + [repr(float(x)) for x in v] + [repr(float(r))])
    return buf.getvalue()


def trace_to_json(trace):
    return {
        "variables": list(trace.variables),
        "row": [str(p) for p in trace.row],
        "points": trace.points.tolist(),
        "values": trace.values.tolist(),
        "norms": kernels.row_norms(trace.values).tolist(),
        "min_norm": trace.min_norm,
    }


def circle_ring(names=("x", "y")):
    return RingContext.quotient(names, _circle_modulus(tuple(names)))


def sphere_ring(names=("x", "y", "z")):
    return RingContext.quotient(names, _sphere_modulus(tuple(names)))
