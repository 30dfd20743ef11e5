"""Time the numba kernels against their numpy counterparts.

Usage: python3 benchmarks/bench_kernels.py [--points N] [--repeat R]

The first numba call includes compilation and is reported separately.
"""

import argparse
import time

import numpy as np

from unirow.topology import kernels


def _best(fn, args, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def cases(n, rng):
    pts = rng.normal(size=(n, 3))
    exps = rng.integers(0, 5, size=(12, 3))
    coefs = rng.normal(size=12)
    f = rng.normal(size=(n, 3))
    g = rng.normal(size=(n, 3))
    th = np.linspace(0, 2 * np.pi, n, endpoint=False)
    loop = np.column_stack([np.cos(th), np.sin(th)])
    return {
        "eval_terms": (pts, exps, coefs),
        "homotopy_min_norm": (f, g, 100),
        "angle_increments": (loop,),
        "row_norms": (f,),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--points", type=int, default=20000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if not kernels.NUMBA_AVAILABLE:
        print("numba is not installed; nothing to compare")
        return 1
    rng = np.random.default_rng(0)
    print(f"{'kernel':<20}{'numpy s':>12}{'numba s':>12}{'jit s':>10}{'speedup':>10}")
    for name, inputs in cases(args.points, rng).items():
        fast = kernels.BACKENDS["numba"][name]
        slow = kernels.BACKENDS["numpy"][name]
        t0 = time.perf_counter()
        a = fast(*inputs)
        jit = time.perf_counter() - t0
        b = slow(*inputs)
        assert np.allclose(a, b, rtol=1e-10, atol=1e-12), f"{name}: backends disagree"
        tn = _best(slow, inputs, args.repeat)
        tb = _best(fast, inputs, args.repeat)
        print(f"{name:<20}{tn:>12.5f}{tb:>12.5f}{jit:>10.3f}{tn / tb:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
