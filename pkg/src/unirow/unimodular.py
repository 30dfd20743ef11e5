"""Unimodular rows: witnesses, elementary reductions and completions.

Rows are row vectors acted on from the right, ``a -> a E_ij(lam)``, which
adds ``lam * a_i`` to ``a_j``.  A factorization is applied left to right.
Witnesses are never searched for: every routine consumes an explicit
witness (or an explicit inverse) and transports it.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field

from .errors import (
    CertificateError,
    ContextMismatch,
    NotAnInverse,
    NotUnimodular,
    NotUnimodularWithWitness,
    StructuralError,
)
from .matrices import (
    ElementaryOp,
    RingMatrix,
    cofactor_row,
    determinant,
    invert_elementary_product,
    product_of_ops,
    rank_one_det_identity,
)
from .rings import Polynomial, RingContext, RingKind, poly_divmod


def _dot(a, b, ctx):
    return ctx.normal_form(sum((x * y for x, y in zip(a, b)), ctx.zero()))


@dataclass(frozen=True)
class UnimodularRow:
    """Row ``a`` with witness ``b``; ``sum(a_i * b_i) = 1`` is checked here."""

    ctx: RingContext
    entries: tuple
    witness: tuple

    def __post_init__(self):
        a = self.ctx.elements(self.entries)
        b = self.ctx.elements(self.witness)
        if len(a) != len(b):
            raise StructuralError(f"row has {len(a)} entries but witness has {len(b)}")
        if len(a) < 2:
            raise StructuralError("unimodular rows need length >= 2")
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "witness", b)
        residual = self.ctx.normal_form(_dot(a, b, self.ctx) - 1)
        if residual:
            raise NotUnimodularWithWitness(residual)

    @property
    def n(self):
        return len(self.entries)


def verify_unimodular(a, b, ctx):
    return UnimodularRow(ctx, tuple(a), tuple(b))


@dataclass(frozen=True)
class ElementaryFactorization:
    """Ordered shears; ``a -> a E(ops[0]) E(ops[1]) ...``."""

    n: int
    ops: tuple = ()

    def __post_init__(self):
        ops = tuple(self.ops)
        for op in ops:
            op.check(self.n)
        object.__setattr__(self, "ops", ops)

    def __len__(self):
        return len(self.ops)

    def matrix(self, ctx):
        return product_of_ops(self.ops, self.n, ctx)

    def apply(self, entries, ctx):
        return apply_ops(entries, self.ops, ctx)

    def inverse(self):
        return ElementaryFactorization(self.n, tuple(invert_elementary_product(self.ops)))

    def then(self, other):
        if other.n != self.n:
            raise StructuralError("cannot concatenate factorizations of different sizes")
        return ElementaryFactorization(self.n, self.ops + other.ops)

    def to_json(self):
        return [op.to_json() for op in self.ops]


def apply_ops(entries, ops, ctx):
    """Right action of shears on a plain row (no witness)."""
    a = list(ctx.elements(entries))
    for op in ops:
        op.check(len(a))
        i, j = op.i - 1, op.j - 1
        a[j] = ctx.normal_form(a[j] + ctx.element(op.lam) * a[i])
    return tuple(a)


def apply_elementary_with_witness(row, op):
    """``a' = a E_ij(lam)`` and ``b' = b E_ji(-lam)``, so ``a' . b' = a . b``."""
    ctx = row.ctx
    op.check(row.n)
    lam = ctx.element(op.lam)
    i, j = op.i - 1, op.j - 1
    a, b = list(row.entries), list(row.witness)
    a[j] = ctx.normal_form(a[j] + lam * a[i])
    b[i] = ctx.normal_form(b[i] - lam * b[j])
    return UnimodularRow(ctx, tuple(a), tuple(b))


def transform_row(row, ops):
    for op in ops:
        row = apply_elementary_with_witness(row, op)
    return row


def is_e1(entries, ctx):
    return ctx.is_one(entries[0]) and all(ctx.is_zero(x) for x in entries[1:])


class Provenance(enum.Enum):
    EUCLID = "Euclid"
    UNIT_REDUCE = "UnitReduce"
    PARTIAL_UNIMODULAR = "PartialUnimodular"
    SWAN = "Swan"
    LIFTED = "Lifted"


@dataclass(frozen=True)
class CompletionCertificate:
    """A determinant-one matrix whose first row is ``row.entries``.

    Verified on construction; :meth:`verify` re-runs the checks from the
    stored data alone.  ``factorization``, when present, reduces the row to
    ``e1`` and its inverse product is ``matrix``.
    """

    row: UnimodularRow
    matrix: RingMatrix
    provenance: Provenance
    factorization: ElementaryFactorization | None = None

    def __post_init__(self):
        self.verify()

    def verify(self):
        ctx = self.row.ctx
        m = self.matrix
        if m.ctx != ctx:
            raise CertificateError("matrix and row live in different rings")
        if m.shape != (self.row.n, self.row.n):
            raise CertificateError(f"matrix shape {m.shape} does not fit row length {self.row.n}")
        for k, (x, y) in enumerate(zip(m.row(0), self.row.entries)):
            if not ctx.equal(x, y):
                raise CertificateError(f"first row differs from the row at entry {k + 1}")
        det = determinant(m)
        if not ctx.is_one(det):
            raise CertificateError(f"determinant is {det}, not 1")
        f = self.factorization
        if f is not None:
            if f.n != self.row.n:
                raise CertificateError("factorization size does not match the row")
            if not is_e1(f.apply(self.row.entries, ctx), ctx):
                raise CertificateError("factorization does not reduce the row to e1")
            if f.inverse().matrix(ctx) != m:
                raise CertificateError("matrix is not the inverse product of the factorization")
        return True


def certificate_from_factorization(row, f, provenance):
    """Completion ``M = (prod f)^-1``; its first row is ``e1 M = row``."""
    m = f.inverse().matrix(row.ctx)
    return CompletionCertificate(row, m, provenance, f)


def certificate_from_matrix(m, provenance):
    """Wrap a determinant-one matrix; the witness is its first-row cofactor vector."""
    row = UnimodularRow(m.ctx, m.row(0), cofactor_row(m, 0))
    return CompletionCertificate(row, m, provenance)


# ---------------------------------------------------------------------------
# reductions to e1


def _unit_to_e1(a, pos, inv, ctx):
    """Shears taking a row with unit ``a[pos]`` (inverse ``inv``) to ``e1``."""
    n = len(a)
    one = ctx.one()
    ops = []

    def push(i, j, lam):
        lam = ctx.normal_form(lam)
        if lam:
            ops.append(ElementaryOp(i + 1, j + 1, lam))

    # clear every other entry with multiples of the unit
    for j in range(n):
        if j != pos:
            push(pos, j, -a[j] * inv)
    if pos == 0:
        if ctx.is_one(a[0]):
            return ops
        push(0, 1, inv)          # (u, 1, 0, ...)
        push(1, 0, one - a[0])   # (1, 1, 0, ...)
        push(0, 1, -one)         # (1, 0, 0, ...)
    else:
        push(pos, 0, inv)        # entry 1 becomes 1
        push(0, pos, -a[pos])    # clear the unit
    return ops


def unit_first_reduce(row, inv):
    """Reduce a row whose first entry is a unit to ``e1`` (``inv`` is its inverse)."""
    ctx = row.ctx
    inv = ctx.element(inv)
    if not ctx.is_one(row.entries[0] * inv):
        raise NotAnInverse(f"{inv} is not an inverse of {row.entries[0]}")
    if is_e1(row.entries, ctx):
        return ElementaryFactorization(row.n)
    return ElementaryFactorization(row.n, tuple(_unit_to_e1(row.entries, 0, inv, ctx)))


def partial_unimodular_reduce(row, i, d):
    """Reduce using a unimodular prefix ``a_1..a_i`` with witness ``d``.

    Entry ``n`` is first pushed to 1 by adding ``(1 - a_n) d_k a_k`` for
    ``k <= i``; it is then a unit and the rest follows.
    """
    ctx = row.ctx
    n = row.n
    if not 1 <= i < n:
        raise StructuralError(f"prefix length must satisfy 1 <= i < n = {n}, got {i}")
    d = ctx.elements(d)
    if len(d) != i:
        raise StructuralError(f"prefix witness needs {i} entries, got {len(d)}")
    a = row.entries
    residual = ctx.normal_form(_dot(a[:i], d, ctx) - 1)
    if residual:
        raise NotUnimodularWithWitness(residual)
    if is_e1(a, ctx):
        return ElementaryFactorization(n)
    gap = ctx.one() - a[-1]
    ops = []
    for k in range(i):
        lam = ctx.normal_form(gap * d[k])
        if lam:
            ops.append(ElementaryOp(k + 1, n, lam))
    a = apply_ops(a, ops, ctx)
    ops += _unit_to_e1(a, n - 1, ctx.one(), ctx)
    return ElementaryFactorization(n, tuple(ops))


def _euclid_kind(ctx):
    if ctx.kind is RingKind.INTEGERS:
        return "Z"
    if ctx.kind is RingKind.RATIONALS:
        return "Q"
    if ctx.kind is RingKind.POLYNOMIAL and len(ctx.variables) == 1:
        return "Q[X]"
    raise StructuralError(f"Euclidean completion needs Z, Q or Q[X]; got {str(ctx)!r}")


def _int(p):
    return p.constant_value().numerator


def euclid_complete(a, ctx):
    """Complete a pair over a Euclidean ring by the division algorithm.

    Returns ``(f, cert)`` with ``a f = (1, 0)`` and ``cert.matrix = (prod f)^-1``.
    Over Z remainders are taken in ``[0, |divisor|)``; over Q[X] the norm is
    the degree.
    """
    kind = _euclid_kind(ctx)
    a = ctx.elements(a)
    if len(a) != 2:
        raise StructuralError("Euclidean completion takes a pair")
    if not a[0] and not a[1]:
        raise NotUnimodular(ctx.zero())
    cur = list(a)
    ops = []

    def shear(i, j, lam):
        if lam:
            ops.append(ElementaryOp(i + 1, j + 1, lam))
            cur[j] = ctx.normal_form(cur[j] + lam * cur[i])

    while cur[0] and cur[1]:
        big = 0 if _norm(cur[0], kind) >= _norm(cur[1], kind) else 1
        small = 1 - big
        q = _quotient(cur[big], cur[small], kind, ctx)
        shear(small, big, -q)
    pos = 0 if cur[0] else 1
    g = cur[pos]
    if kind == "Z":
        if abs(_int(g)) != 1:
            raise NotUnimodular(Polynomial.constant((), abs(_int(g))))
        inv = g
    else:
        if not g.is_constant():
            raise NotUnimodular(g.scale(1 / g.leading_coefficient()))
        inv = ctx.element(1 / g.constant_value())
    for op in _unit_to_e1(tuple(cur), pos, inv, ctx):
        shear(op.i - 1, op.j - 1, op.lam)
    f = ElementaryFactorization(2, tuple(ops))
    m = f.inverse().matrix(ctx)
    row = UnimodularRow(ctx, a, cofactor_row(m, 0))
    return f, CompletionCertificate(row, m, Provenance.EUCLID, f)


def _norm(p, kind):
    if kind == "Z":
        return abs(_int(p))
    return p.degree()


def _quotient(num, den, kind, ctx):
    if kind == "Z":
        x, y = _int(num), _int(den)
        r = x % abs(y)
        return ctx.element((x - r) // y)
    return poly_divmod(num, den, ctx.order)[0]


def complete_with(row, f, provenance):
    """Certificate for a row given a factorization that reduces it to ``e1``."""
    if not is_e1(f.apply(row.entries, row.ctx), row.ctx):
        raise CertificateError("factorization does not reduce the row to e1")
    return certificate_from_factorization(row, f, provenance)


# ---------------------------------------------------------------------------
# homotopies


def factorization_path(f, ctx, parameter="t"):
    """Replace each ``lam`` by ``lam * t`` over ``ctx`` extended with ``t``.

    Returns ``(extended_ctx, path)``.
    """
    ext = ctx.extend_with_variable(parameter)
    t = ext.var(parameter)
    ops = tuple(
        ElementaryOp(op.i, op.j, ext.element(ctx.element(op.lam).embed(ext.variables)) * t)
        for op in f.ops
    )
    return ext, ElementaryFactorization(f.n, ops)


def specialize(p, ext, parameter, value, base):
    """Set ``parameter`` to a rational ``value`` and drop it from the variables."""
    q = p.compose({parameter: Polynomial.constant(ext.variables, value)}, ext.variables)
    return base.element(q.embed(base.variables))


def specialize_ops(f, ext, parameter, value, base):
    return ElementaryFactorization(
        f.n,
        tuple(
            ElementaryOp(op.i, op.j, specialize(op.lam, ext, parameter, value, base))
            for op in f.ops
        ),
    )


@dataclass(frozen=True)
class IsotopyCertificate:
    """``beta(t) = I + (c - b)^t a t``: ``beta(0) = I``, ``beta(1) b^t = c^t``, det 1."""

    ctx: RingContext
    parameter: str
    beta: RingMatrix
    row: tuple
    source: tuple
    target: tuple
    short_row: bool = field(default=False)

    def __post_init__(self):
        self.verify()

    def endpoint(self, value):
        ext = self.beta.ctx
        return self.beta.map(
            lambda p: specialize(p, ext, self.parameter, value, self.ctx), self.ctx
        )

    def verify(self):
        ctx = self.ctx
        ext = self.beta.ctx
        if ext.variables != ctx.variables + (self.parameter,):
            raise CertificateError("path matrix is not over the ring extended by the parameter")
        n = len(self.row)
        if self.beta.shape != (n, n) or len(self.source) != n or len(self.target) != n:
            raise CertificateError("shape mismatch in isotopy certificate")
        if not self.endpoint(0).is_identity():
            raise CertificateError("beta(0) is not the identity")
        b1 = self.endpoint(1)
        for k in range(n):
            if not ctx.equal(_dot(b1.row(k), self.source, ctx), self.target[k]):
                raise CertificateError(f"beta(1) b^t differs from c^t at entry {k + 1}")
        if not ext.is_one(determinant(self.beta)):
            raise CertificateError("det beta(t) is not identically 1")
        return True


def vaserstein_isotopy(a, b, c, ctx, parameter="t"):
    """Path in SL_n from the identity to a matrix carrying ``b^t`` to ``c^t``.

    Requires ``a . b = a . c = 1``.  For n = 2 the construction still works;
    a warning is issued and ``short_row`` is set on the certificate.
    """
    a, b, c = ctx.elements(a), ctx.elements(b), ctx.elements(c)
    if not len(a) == len(b) == len(c) or len(a) < 2:
        raise StructuralError("isotopy needs three vectors of equal length >= 2")
    for w in (b, c):
        residual = ctx.normal_form(_dot(a, w, ctx) - 1)
        if residual:
            raise NotUnimodularWithWitness(residual)
    n = len(a)
    short = n < 3
    if short:
        warnings.warn("isotopy requested for n = 2, where the isotopy argument needs n >= 3", stacklevel=2)
    ext = ctx.extend_with_variable(parameter)
    t = ext.var(parameter)
    up = lambda p: ext.element(p.embed(ext.variables))  # noqa: E731
    diff = [up(ci - bi) * t for bi, ci in zip(b, c)]
    arow = [up(x) for x in a]
    lhs, rhs = rank_one_det_identity(diff, arow, ext)
    if not ext.is_one(rhs) or not ext.is_one(lhs):
        raise CertificateError("rank-one determinant of the path is not 1")
    rows = [[(1 if i == j else 0) + diff[i] * arow[j] for j in range(n)] for i in range(n)]
    beta = RingMatrix(ext, rows)
    return IsotopyCertificate(ctx, parameter, beta, a, b, c, short)


# ---------------------------------------------------------------------------
# lifting modulo an ideal


def _residue(p, m):
    v = p.constant_value()
    if v.denominator != 1:
        raise StructuralError(f"{p} is not an integer")
    return Polynomial.constant(p.variables, v.numerator % m)


def _check_lift_contexts(base, quotient):
    if isinstance(quotient, int):
        if base.kind is not RingKind.INTEGERS or quotient < 1:
            raise ContextMismatch("Z/(m) lifting needs base ring Z and m >= 1")
        return
    if not isinstance(quotient, RingContext) or not quotient.is_quotient:
        raise ContextMismatch("lifting needs a principal quotient ring or an integer modulus")
    if base.kind is not RingKind.POLYNOMIAL or base.variables != quotient.variables:
        raise ContextMismatch(f"{quotient} is not a quotient of {base}")


def reduce_mod(p, base, quotient):
    """Canonical representative of ``p`` in the quotient (returned over ``base``)."""
    if isinstance(quotient, int):
        return _residue(base.element(p), quotient)
    return quotient.normal_form(base.element(p))


def reduce_ops(f, base, quotient):
    return ElementaryFactorization(
        f.n, tuple(ElementaryOp(op.i, op.j, reduce_mod(op.lam, base, quotient)) for op in f.ops)
    )


def lift_elementary_factorization(fbar, base, quotient):
    """Lift shears over ``A/J`` to shears over ``A`` via canonical representatives.

    ``quotient`` is a principal-quotient :class:`RingContext` over the same
    variables as ``base``, or an integer ``m`` for ``Z/(m)`` with base ``Z``.
    """
    _check_lift_contexts(base, quotient)
    return reduce_ops(fbar, base, quotient)


def transform_row_with_lift(row, fbar, quotient):
    """Lift ``fbar`` and apply it to ``row`` (over ``A``) with witness transport."""
    _check_lift_contexts(row.ctx, quotient)
    lift = lift_elementary_factorization(fbar, row.ctx, quotient)
    return transform_row(row, lift.ops), lift


def reduce_row(entries, base, quotient):
    return tuple(reduce_mod(x, base, quotient) for x in entries)


def apply_ops_mod(entries, f, base, quotient):
    """Right action over ``A/J`` on canonical representatives."""
    a = list(reduce_row(entries, base, quotient))
    for op in f.ops:
        op.check(len(a))
        i, j = op.i - 1, op.j - 1
        a[j] = reduce_mod(a[j] + reduce_mod(op.lam, base, quotient) * a[i], base, quotient)
    return tuple(a)


# ---------------------------------------------------------------------------
# skew-symmetric forms and quaternions


def skew_matrix(a, b, ctx):
    """The 4x4 matrix ``V(a, b)`` with no witness check."""
    a, b = ctx.elements(a), ctx.elements(b)
    if len(a) != 3 or len(b) != 3:
        raise StructuralError("V(a, b) needs two 3-vectors")
    z = ctx.zero()
    return RingMatrix(ctx, [
        [z, a[0], a[1], a[2]],
        [-a[0], z, b[2], -b[1]],
        [-a[1], -b[2], z, b[0]],
        [-a[2], b[1], -b[0], z],
    ])


def skew_form(a, b, ctx):
    """``V(a, b)`` for a unimodular 3-row with witness; determinant ``(a.b)^2 = 1``."""
    row = UnimodularRow(ctx, tuple(a), tuple(b))
    return skew_matrix(row.entries, row.witness, ctx)


def conjugate_skew(v, tau):
    """``beta^t V beta`` with ``beta = diag(1, T)``, ``T`` the product of ``tau``.

    With this ``beta``, ``V(a, b)`` maps to ``V(a T, b (T^-1)^t)``.
    """
    if v.shape != (4, 4):
        raise StructuralError(f"expected a 4x4 matrix, got {v.shape}")
    if tau.n != 3:
        raise StructuralError(f"expected a size-3 factorization, got size {tau.n}")
    ctx = v.ctx
    t = tau.matrix(ctx)
    z = ctx.zero()
    beta = RingMatrix(ctx, [[ctx.one(), z, z, z]] + [[z] + list(r) for r in t.entries])
    return beta.transpose() @ v @ beta


def quaternion_left_matrix(x1, x2, x3, x4, ctx):
    """Matrix of ``q -> (x1 + i x2 + j x3 + k x4) q`` in the basis 1, i, j, k."""
    x1, x2, x3, x4 = ctx.elements((x1, x2, x3, x4))
    return RingMatrix(ctx, [
        [x1, -x2, -x3, -x4],
        [x2, x1, -x4, x3],
        [x3, x4, x1, -x2],
        [x4, -x3, x2, x1],
    ])


__all__ = [
    "CompletionCertificate",
    "ElementaryFactorization",
    "IsotopyCertificate",
    "Provenance",
    "UnimodularRow",
    "apply_elementary_with_witness",
    "apply_ops",
    "conjugate_skew",
    "euclid_complete",
    "factorization_path",
    "lift_elementary_factorization",
    "partial_unimodular_reduce",
    "quaternion_left_matrix",
    "skew_form",
    "skew_matrix",
    "transform_row_with_lift",
    "unit_first_reduce",
    "vaserstein_isotopy",
    "verify_unimodular",
]
