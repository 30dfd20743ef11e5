"""Shared generators and independent oracles for the test suite."""

import itertools
import math
import random
from fractions import Fraction

from unirow import ElementaryOp, Polynomial, RingContext, UnimodularRow
from unirow.unimodular import apply_elementary_with_witness


def leibniz_det(rows):
    """Permutation-sum determinant of a small square matrix of ring elements."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term = rows[i][p] * term
        total = term + total
    return total


def random_poly(ctx, rng, degree=2, terms=3, coef=3):
    """Small random element of ``ctx`` (integer coefficients)."""
    if not ctx.variables:
        return ctx.element(rng.randint(-coef, coef))
    m = len(ctx.variables)
    p = Polynomial.zero(ctx.variables)
    for _ in range(terms):
        exps = [0] * m
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(m)] += 1
        p = p + Polynomial.monomial(ctx.variables, tuple(exps), rng.randint(-coef, coef))
    return ctx.normal_form(p)


def random_ops(ctx, n, rng, count, degree=1, coef=3):
    ops = []
    for _ in range(count):
        i, j = rng.sample(range(1, n + 1), 2)
        lam = random_poly(ctx, rng, degree=degree, terms=2, coef=coef)
        if not lam:
            lam = ctx.one()
        ops.append(ElementaryOp(i, j, lam))
    return tuple(ops)


def random_unimodular_row(ctx, n, rng, steps=4, degree=1, coef=3):
    """``e1`` pushed through random shears, with the witness carried along."""
    row = UnimodularRow(ctx, (1,) + (0,) * (n - 1), (1,) + (0,) * (n - 1))
    for op in random_ops(ctx, n, rng, steps, degree=degree, coef=coef):
        row = apply_elementary_with_witness(row, op)
    return row


def koszul_shift(row, rng, ctx, coef=2):
    """Another witness ``c = b + sum lam (a_i e_j - a_j e_i)``; still ``a . c = 1``."""
    a, c = row.entries, list(row.witness)
    n = len(a)
    for _ in range(2):
        i, j = rng.sample(range(n), 2)
        lam = random_poly(ctx, rng, degree=1, terms=2, coef=coef)
        c[j] = ctx.normal_form(c[j] + lam * a[i])
        c[i] = ctx.normal_form(c[i] - lam * a[j])
    return tuple(c)


def coprime_int_pair(rng, bound=10**6):
    while True:
        x, y = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if (x or y) and math.gcd(x, y) == 1:
            return x, y


def _fraction_det(rows):
    """Gaussian elimination over Fraction."""
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


def resultant(f, g):
    """Sylvester resultant of two univariate polynomials (coefficients high to low)."""
    df, dg = f.degree(), g.degree()
    if df == 0 and dg == 0:
        return Fraction(1) if (f.constant_value() or g.constant_value()) else Fraction(0)
    cf = [f.terms.get((k,), 0) for k in range(df, -1, -1)]
    cg = [g.terms.get((k,), 0) for k in range(dg, -1, -1)]
    size = df + dg
    rows = []
    for s in range(dg):
        rows.append([0] * s + cf + [0] * (size - s - len(cf)))
    for s in range(df):
        rows.append([0] * s + cg + [0] * (size - s - len(cg)))
    return _fraction_det(rows)


def coprime_univariate_pair(rng, ctx, max_degree=4):
    """Random pair in Q[X] with nonzero resultant (so the gcd is a unit)."""
    x = ctx.var(ctx.variables[0])
    while True:
        f = sum((x ** k * rng.randint(-5, 5) for k in range(rng.randint(1, max_degree) + 1)),
                ctx.zero())
        g = sum((x ** k * rng.randint(-5, 5) for k in range(rng.randint(0, max_degree) + 1)),
                ctx.zero())
        if f.is_zero() or g.is_zero():
            continue
        if resultant(f, g) != 0:
            return f, g


RNG = random.Random


def sphere_ctx():
    return RingContext.quotient(("x", "y", "z"), "x^2 + y^2 + z^2 - 1")


def circle_ctx():
    return RingContext.quotient(("x", "y"), "x^2 + y^2 - 1")
