"""Completion of ``(a^2, b, c)`` from a unimodular row ``(a, b, c)``.

The matrix chain is built once over the generic ring
``Q[a, b, c, ap, bp, cp]`` (``ap`` standing for a', and so on) and then
specialized to concrete ring elements by substitution.

Chain: ``alpha`` (4x4, det ``s^2`` with ``s = a ap + b bp + c cp``), the
shears ``alpha1``, ``alpha2`` and ``alpha' = alpha1 alpha2 alpha``; two
witness-preserving substitutions give ``beta`` and ``sigma``; the final 3x3
block is sigma's lower block with rows and columns 2 and 3 swapped, which
moves ``(a^2, c, b)`` to ``(a^2, b, c)`` without changing the determinant.
"""

from functools import lru_cache

from .errors import NotUnimodularWithWitness
from .matrices import RingMatrix, cofactor_row, determinant
from .rings import RingContext
from .unimodular import CompletionCertificate, Provenance, UnimodularRow, _dot

GENERIC_VARS = ("a", "b", "c", "ap", "bp", "cp")


def generic_ring():
    return RingContext.polynomial_ring(GENERIC_VARS)


@lru_cache(maxsize=1)
def swan_chain():
    """All intermediate matrices over the generic ring, keyed by name."""
    g = generic_ring()
    a, b, c, ap, bp, cp = g.gens()
    z, one = g.zero(), g.one()
    alpha = RingMatrix(g, [
        [z, a, b, c],
        [-a, z, cp, -bp],
        [-b, -cp, z, ap],
        [-c, bp, -ap, z],
    ])
    alpha1 = RingMatrix(g, [
        [one, z, z, z],
        [a, one, z, z],
        [b, z, one, z],
        [c, z, z, one],
    ])
    alpha2 = RingMatrix(g, [
        [one, -ap, -bp, -cp],
        [z, one, z, z],
        [z, z, one, z],
        [z, z, z, one],
    ])
    alpha_prime = alpha1 @ alpha2 @ alpha
    # reduce modulo s - 1: the border becomes (1, a, b, c) and (1, 0, 0, 0)^t,
    # the lower block is already reduced
    unit = RingContext.quotient(GENERIC_VARS, a * ap + b * bp + c * cp - 1)
    alpha_prime_reduced = alpha_prime.map(unit.normal_form)
    beta = alpha_prime_reduced.map(lambda p: p.compose({"bp": bp + a * c, "cp": cp - a * b}))
    sigma = beta.map(lambda p: p.compose({"b": -bp, "c": cp, "bp": -b, "cp": c}))
    low = [list(r[1:]) for r in sigma.entries[1:]]
    perm = [0, 2, 1]
    alpha3 = RingMatrix(g, [[low[i][j] for j in perm] for i in perm])
    return {
        "alpha": alpha,
        "alpha1": alpha1,
        "alpha2": alpha2,
        "alpha_prime": alpha_prime,
        "alpha_prime_reduced": alpha_prime_reduced,
        "beta": beta,
        "sigma": sigma,
        "alpha3": alpha3,
    }


def printed_alpha3():
    """The final 3x3 block exactly as it is usually displayed (for cross-checks)."""
    g = generic_ring()
    a, b, c, ap, bp, cp = g.gens()
    return RingMatrix(g, [
        [a**2, b, c],
        [-2 * a * cp - b, cp**2, -bp * cp + ap],
        [2 * a * bp - c, -bp * cp - ap, bp**2],
    ])


def witness_sum():
    g = generic_ring()
    a, b, c, ap, bp, cp = g.gens()
    return a * ap + b * bp + c * cp


def swan_complete(a, b, c, ap, bp, cp, ctx):
    """Determinant-one 3x3 matrix over ``ctx`` with first row ``(a^2, b, c)``.

    Needs ``a*ap + b*bp + c*cp = 1`` in ``ctx``.
    """
    vals = ctx.elements((a, b, c, ap, bp, cp))
    residual = ctx.normal_form(_dot(vals[:3], vals[3:], ctx) - 1)
    if residual:
        raise NotUnimodularWithWitness(residual)
    generic = swan_chain()["alpha3"]
    m = generic.map(lambda p: ctx.element(p.compose(list(vals), ctx.variables)), ctx)
    # first-row cofactors are a witness for (a^2, b, c) since det = 1
    row = UnimodularRow(ctx, m.row(0), cofactor_row(m, 0))
    return CompletionCertificate(row, m, Provenance.SWAN)


def generic_det_check():
    """``(det alpha - s^2, det alpha3 - s^2)`` over the generic ring; both should be 0."""
    chain = swan_chain()
    s = witness_sum()
    return determinant(chain["alpha"]) - s * s, determinant(chain["alpha3"]) - s * s


__all__ = ["swan_chain", "swan_complete", "printed_alpha3", "generic_ring", "witness_sum",
           "generic_det_check", "GENERIC_VARS"]
