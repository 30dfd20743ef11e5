"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _support import (  # noqa: E402
    RNG,
    coprime_int_pair,
    coprime_univariate_pair,
    koszul_shift,
    leibniz_det,
    random_ops,
    random_unimodular_row,
)

from unirow import (  # noqa: E402
    ElementaryFactorization,
    ElementaryOp,
    RingContext,
    RingMatrix,
    conjugate_skew,
    determinant,
    euclid_complete,
    is_skew_symmetric,
    lift_elementary_factorization,
    poly_divmod,
    quaternion_left_matrix,
    rank_one_det_identity,
    swan_complete,
    transform_row_with_lift,
    vaserstein_isotopy,
)
from unirow.swan import swan_chain, witness_sum  # noqa: E402
from unirow.topology import (  # noqa: E402
    Circle,
    Sphere2,
    circle_ring,
    elementary_action_preserves_winding,
    elementary_path_check,
    eval_row_map,
    reflection,
    reflection_matrix,
    rotation_between,
    sample_variety,
    sphere_ring,
    straight_line_homotopy_check,
    vaserstein_midpoint,
    winding_report,
)
from unirow.unimodular import (  # noqa: E402
    apply_ops_mod,
    is_e1,
    reduce_ops,
    reduce_row,
    skew_matrix,
)

Z = RingContext.integers()
RESULTS = {}


def report(number, title, check):
    """Run ``check``; print one line and re-raise on failure."""
    try:
        detail = check()
    except Exception as exc:
        line = f"FAIL criterion {number:>2} {title}: {type(exc).__name__}: {exc}"
        RESULTS[number] = False
        _emit(line)
        raise
    RESULTS[number] = True
    _emit(f"PASS criterion {number:>2} {title}" + (f" ({detail})" if detail else ""))


_capture = None


def _emit(line):
    if _capture is not None:
        with _capture.disabled():
            print(line)
    else:
        print(line)


@pytest.fixture(autouse=True)
def _show_lines(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


# ---------------------------------------------------------------- 1


def check_rank_one():
    for n in (2, 3, 4):
        names = [f"x{k}" for k in range(n)] + [f"y{k}" for k in range(n)]
        ring = RingContext.polynomial_ring(names)
        x = [ring.var(f"x{k}") for k in range(n)]
        y = [ring.var(f"y{k}") for k in range(n)]
        lhs, rhs = rank_one_det_identity(x, y, ring)
        assert lhs == rhs, f"symbolic identity fails for n = {n}"
    rng = RNG(101)
    for n in (2, 3, 4):
        for _ in range(500):
            x = [rng.randint(-9, 9) for _ in range(n)]
            y = [rng.randint(-9, 9) for _ in range(n)]
            lhs, rhs = rank_one_det_identity(x, y, Z)
            rows = [[(i == j) + x[i] * y[j] for j in range(n)] for i in range(n)]
            direct = determinant(RingMatrix(Z, rows))
            assert lhs == rhs == direct == leibniz_det(rows)
    return "symbolic n = 2, 3, 4; 1500 integer instances"


def test_criterion_01_rank_one_determinant():
    report(1, "rank-one determinant identity", check_rank_one)


# ---------------------------------------------------------------- 2


def _check_completion(pair, ctx):
    f, cert = euclid_complete(pair, ctx)
    assert is_e1(f.apply(pair, ctx), ctx)
    assert ctx.is_one(determinant(cert.matrix))
    assert cert.matrix.row(0) == ctx.elements(pair)


def check_euclid():
    rng = RNG(202)
    qx = RingContext.polynomial_ring(("x",))
    int_pairs = [coprime_int_pair(rng) for _ in range(200)]
    poly_pairs = [coprime_univariate_pair(rng, qx) for _ in range(100)]
    start = time.perf_counter()
    for pair in int_pairs:
        _check_completion(pair, Z)
    for pair in poly_pairs:
        _check_completion(pair, qx)
    elapsed = time.perf_counter() - start
    assert elapsed < 2.0, f"took {elapsed:.2f} s"
    return f"300 pairs in {elapsed:.2f} s"


def test_criterion_02_euclidean_completion():
    report(2, "Euclidean completion", check_euclid)


# ---------------------------------------------------------------- 3


def check_isotopy():
    rng = RNG(303)
    for ctx in (Z, sphere_ring()):
        for _ in range(50):
            row = random_unimodular_row(ctx, 3, rng, steps=4)
            c = koszul_shift(row, rng, ctx)
            cert = vaserstein_isotopy(row.entries, row.witness, c, ctx)
            ext = cert.beta.ctx
            assert cert.endpoint(0).is_identity()
            b1 = cert.endpoint(1)
            for k in range(3):
                got = sum((b1[k, j] * row.witness[j] for j in range(3)), ctx.zero())
                assert ctx.equal(got, c[k])
            assert ext.is_one(determinant(cert.beta))
    return "50 triples over Z and 50 over the sphere ring"


def test_criterion_03_vaserstein_isotopy():
    report(3, "Vaserstein isotopy", check_isotopy)


# ---------------------------------------------------------------- 4


def check_swan():
    chain = swan_chain()
    s = witness_sum()
    assert determinant(chain["alpha"]) == s * s
    det3 = determinant(chain["alpha3"])
    _, r = poly_divmod(det3 - 1, s - 1)
    assert r.is_zero(), f"remainder {r}"
    ctx = sphere_ring()
    cert = swan_complete("x", "y", "z", "x", "y", "z", ctx)
    first = cert.matrix.row(0)
    for got, want in zip(first, ctx.elements(("x^2", "y", "z"))):
        assert ctx.equal(got, want)
    assert ctx.is_one(determinant(cert.matrix))
    return None


def test_criterion_04_swan_completion():
    report(4, "Swan completion", check_swan)


# ---------------------------------------------------------------- 5


def check_lifting():
    rng = RNG(505)
    for _ in range(50):
        m = rng.randint(2, 11)
        row = random_unimodular_row(Z, 3, rng, steps=3, coef=20)
        ops = tuple(ElementaryOp(o.i, o.j, Z.element(rng.randint(-50, 50) or 1))
                    for o in random_ops(Z, 3, rng, 4))
        fbar = ElementaryFactorization(3, ops)
        lift = lift_elementary_factorization(fbar, Z, m)
        assert reduce_ops(lift, Z, m).ops == reduce_ops(fbar, Z, m).ops
        assert all(0 <= op.lam.constant_value() < m for op in lift.ops)
        c, _ = transform_row_with_lift(row, fbar, m)
        assert reduce_row(c.entries, Z, m) == apply_ops_mod(row.entries, fbar, Z, m)
    base = RingContext.polynomial_ring(("x", "y"))
    quotient = circle_ring()
    for _ in range(50):
        row = random_unimodular_row(base, 3, rng, steps=3)
        fbar = ElementaryFactorization(3, random_ops(base, 3, rng, 3, degree=3))
        lift = lift_elementary_factorization(fbar, base, quotient)
        assert lift.ops == reduce_ops(fbar, base, quotient).ops
        assert reduce_ops(lift, base, quotient).ops == lift.ops
        c, _ = transform_row_with_lift(row, fbar, quotient)
        assert reduce_row(c.entries, base, quotient) == apply_ops_mod(row.entries, fbar, base,
                                                                      quotient)
    return "50 over Z/(m) and 50 over the circle ring"


def test_criterion_05_lifting():
    report(5, "lifting modulo an ideal", check_lifting)


# ---------------------------------------------------------------- 6


def check_skew():
    ring = RingContext.polynomial_ring(("a1", "a2", "a3", "b1", "b2", "b3", "l"))
    a = tuple(ring.var(f"a{k}") for k in (1, 2, 3))
    b = tuple(ring.var(f"b{k}") for k in (1, 2, 3))
    lam = ring.var("l")
    v = skew_matrix(a, b, ring)
    s = sum((x * y for x, y in zip(a, b)), ring.zero())
    assert determinant(v) == s * s
    patterns = 0
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            tau = ElementaryFactorization(3, (ElementaryOp(i, j, lam),))
            a2 = list(a)
            a2[j - 1] = a2[j - 1] + lam * a[i - 1]
            b2 = list(b)
            b2[i - 1] = b2[i - 1] - lam * b[j - 1]
            out = conjugate_skew(v, tau)
            assert out == skew_matrix(a2, b2, ring), f"pattern E_{i}{j}"
            assert is_skew_symmetric(out)
            patterns += 1
    return f"{patterns} generator patterns"


def test_criterion_06_skew_form_covariance():
    report(6, "skew-form covariance", check_skew)


# ---------------------------------------------------------------- 7


def check_winding():
    ctx = circle_ring()
    s360 = sample_variety(Circle(360), ctx)
    rep = winding_report(eval_row_map(ctx.elements(("x", "y")), s360).values)
    assert rep["winding"] == 1 and rep["residual"] < 1e-6
    assert winding_report(eval_row_map(ctx.elements(("1", "0")), s360).values)["winding"] == 0
    sq = winding_report(eval_row_map(ctx.elements(("x^2 - y^2", "2*x*y")), s360).values)
    assert sq["winding"] == 2
    dense = sample_variety(Circle(2048), ctx)
    rng = RNG(707)
    xy = ctx.elements(("x", "y"))
    for _ in range(100):
        f = ElementaryFactorization(2, random_ops(ctx, 2, rng, rng.randint(1, 4), coef=2))
        w0, w1 = elementary_action_preserves_winding(xy, f, dense, ctx)
        assert w0 == w1 == 1
    return None


def test_criterion_07_winding_obstruction():
    report(7, "winding obstruction", check_winding)


# ---------------------------------------------------------------- 8


def _unit(rng, d):
    v = rng.normal(size=d)
    return v / np.linalg.norm(v)


def check_reflections():
    rng = np.random.default_rng(808)
    tol = 1e-9
    for k in range(1000):
        d = 2 + k % 3
        v0, vt, w, v = (_unit(rng, d) for _ in range(4))
        r = reflection_matrix(w)
        assert np.allclose(r @ r, np.eye(d), atol=tol)
        perp = v - (v @ w) * w
        assert np.allclose(reflection(w, perp), perp, atol=tol)
        assert np.allclose(reflection(w, w), -w, atol=tol)
        assert abs(np.linalg.det(r) + 1) < tol
        alpha = rotation_between(v0, vt)
        assert np.allclose(alpha @ v0, vt, atol=tol)
        assert np.allclose(alpha.T @ alpha, np.eye(d), atol=tol)
        mid = vaserstein_midpoint(v0, vt)
        assert abs(v0 @ mid - 1) < tol and abs(vt @ mid - 1) < tol
    return "1000 pairs, dimensions 2 to 4"


def test_criterion_08_reflections():
    report(8, "reflection and rotation numerics", check_reflections)


# ---------------------------------------------------------------- 9


def check_homotopy():
    rng = RNG(909)
    worst = np.inf
    for ctx, sample, gens in (
        (circle_ring(), Circle(360), ("x", "y")),
        (sphere_ring(), Sphere2(17, 32), ("x", "y", "z")),
    ):
        pts = sample_variety(sample, ctx)
        a = ctx.elements(gens)
        for _ in range(25):
            f = ElementaryFactorization(len(a), random_ops(ctx, len(a), rng, 3, coef=2))
            ok, m = elementary_path_check(a, f, ctx, pts, steps=100)
            assert ok, f"path vanishes (min {m})"
            worst = min(worst, m)
    circle = circle_ring()
    pts = sample_variety(Circle(360), circle)
    f = eval_row_map(circle.elements(("x", "y")), pts)
    g = eval_row_map(circle.elements(("-x", "-y")), pts)
    ok, _ = straight_line_homotopy_check(f, g, 100)
    assert not ok, "antipodal pair was not detected"
    return f"smallest path norm {worst:.3g}"


def test_criterion_09_homotopy_nonvanishing():
    report(9, "homotopy nonvanishing", check_homotopy)


# ---------------------------------------------------------------- 10


def check_quaternion():
    ring = RingContext.polynomial_ring(("x2", "x3", "x4"))
    x2, x3, x4 = ring.gens()
    m = quaternion_left_matrix(0, x2, x3, x4, ring)
    assert is_skew_symmetric(m)
    n = x2 * x2 + x3 * x3 + x4 * x4
    assert determinant(m) == n * n
    return None


def test_criterion_10_quaternion_matrices():
    report(10, "quaternion matrices", check_quaternion)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
