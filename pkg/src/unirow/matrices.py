"""Dense matrices over a :class:`~unirow.rings.RingContext`.

Entries are kept in normal form, so matrix equality is entrywise polynomial
equality.  Indices in :class:`ElementaryOp` are 1-based; everything else
(``M[i, j]``, ``M.row(i)``) is 0-based like ordinary Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ContextMismatch, StructuralError
from .rings import Polynomial, format_polynomial


@dataclass(frozen=True)
class ElementaryOp:
    """The shear ``E_ij(lam)``: identity plus ``lam`` at row ``i``, column ``j``."""

    i: int
    j: int
    lam: Polynomial

    def __post_init__(self):
        if self.i == self.j:
            raise StructuralError(f"elementary op needs i != j, got i = j = {self.i}")
        if self.i < 1 or self.j < 1:
            raise StructuralError("elementary op indices are 1-based")

    def check(self, n):
        if self.i > n or self.j > n:
            raise StructuralError(f"op ({self.i}, {self.j}) out of range for size {n}")

    def inverse(self):
        return ElementaryOp(self.i, self.j, -self.lam)

    def to_json(self):
        return [self.i, self.j, format_polynomial(self.lam)]


class RingMatrix:
    """Immutable ``rows x cols`` matrix with entries normalized in ``ctx``."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx, data, normalize=True):
        rows = [list(r) for r in data]
        if not rows:
            raise StructuralError("matrix needs at least one row")
        cols = len(rows[0])
        if cols == 0 or any(len(r) != cols for r in rows):
            raise StructuralError("ragged or empty matrix rows")
        if normalize:
            entries = tuple(tuple(ctx.element(x) for x in r) for r in rows)
        else:
            entries = tuple(tuple(r) for r in rows)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RingMatrix is immutable")

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def transpose(self):
        return RingMatrix(self.ctx, zip(*self.entries), normalize=False)

    def map(self, fn, ctx=None):
        ctx = ctx or self.ctx
        return RingMatrix(ctx, [[fn(x) for x in r] for r in self.entries])

    def __neg__(self):
        return RingMatrix(self.ctx, [[-x for x in r] for r in self.entries], normalize=False)

    def __add__(self, other):
        _same_ctx(self, other)
        if self.shape != other.shape:
            raise StructuralError(f"shape mismatch {self.shape} vs {other.shape}")
        return RingMatrix(
            self.ctx,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self.entries == other.entries

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def is_identity(self):
        return all(
            x == (1 if i == j else 0)
            for i, r in enumerate(self.entries)
            for j, x in enumerate(r)
        )

    def __repr__(self):
        body = "; ".join(", ".join(format_polynomial(x) for x in r) for r in self.entries)
        return f"RingMatrix({self.ctx}, [{body}])"

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_polynomial(x) for x in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, data, ctx):
        m = cls(ctx, [[ctx.element(s) for s in r] for r in data["entries"]])
        if m.shape != (data["rows"], data["cols"]):
            raise StructuralError("declared shape does not match entries")
        return m


def _same_ctx(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch(f"matrices over different rings: {a.ctx} vs {b.ctx}")


def identity_matrix(n, ctx):
    one, zero = ctx.one(), ctx.zero()
    return RingMatrix(ctx, [[one if i == j else zero for j in range(n)] for i in range(n)],
                      normalize=False)


def zero_matrix(rows, cols, ctx):
    zero = ctx.zero()
    return RingMatrix(ctx, [[zero] * cols for _ in range(rows)], normalize=False)


def mat_mul(a, b):
    _same_ctx(a, b)
    if a.cols != b.rows:
        raise StructuralError(f"cannot multiply {a.shape} by {b.shape}")
    bt = b.transpose().entries
    zero = a.ctx.zero()
    out = []
    for r in a.entries:
        out_row = []
        for c in bt:
            acc = zero
            for x, y in zip(r, c):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return RingMatrix(a.ctx, out)


def elementary_matrix(n, op, ctx):
    op.check(n)
    rows = [[ctx.one() if i == j else ctx.zero() for j in range(n)] for i in range(n)]
    rows[op.i - 1][op.j - 1] = op.lam
    return RingMatrix(ctx, rows)


def product_of_ops(ops, n, ctx):
    """Left-to-right product ``E(ops[0]) E(ops[1]) ...``, built by column shears."""
    rows = [[ctx.one() if i == j else ctx.zero() for j in range(n)] for i in range(n)]
    for op in ops:
        op.check(n)
        lam = ctx.element(op.lam)
        # right-multiplying by E_ij(lam) adds lam * column i to column j
        i, j = op.i - 1, op.j - 1
        for r in rows:
            if r[i]:
                r[j] = ctx.normal_form(r[j] + lam * r[i])
    return RingMatrix(ctx, rows, normalize=False)


def determinant(m):
    """Exact determinant by memoized cofactor (Laplace) expansion.

    Only ring operations are used, so this is valid over quotient rings with
    zero divisors.
    """
    if m.rows != m.cols:
        raise StructuralError(f"determinant of non-square {m.shape} matrix")
    ctx = m.ctx
    e = m.entries
    n = m.rows

    @lru_cache(maxsize=None)
    def minor(r, cols):
        if r == n:
            return ctx.one()
        acc = ctx.zero()
        for k, c in enumerate(cols):
            x = e[r][c]
            if not x:
                continue
            sub = minor(r + 1, cols[:k] + cols[k + 1:])
            if not sub:
                continue
            term = x * sub
            acc = acc - term if k % 2 else acc + term
        return ctx.normal_form(acc)

    return minor(0, tuple(range(n)))


def cofactor_row(m, i=0):
    """Signed cofactors ``C_i1..C_in``; ``sum_j m[i,j] * C_ij = det(m)``."""
    if m.rows != m.cols:
        raise StructuralError("cofactors need a square matrix")
    n = m.rows
    if n == 1:
        return (m.ctx.one(),)
    out = []
    for j in range(n):
        sub = RingMatrix(
            m.ctx,
            [[m[r, c] for c in range(n) if c != j] for r in range(n) if r != i],
            normalize=False,
        )
        d = determinant(sub)
        out.append(-d if (i + j) % 2 else d)
    return tuple(out)


def rank_one_det_identity(x, y, ctx):
    """Return ``(det(I + x^t y), 1 + x . y^t)`` for row vectors ``x``, ``y``."""
    x, y = ctx.elements(x), ctx.elements(y)
    if len(x) != len(y) or not x:
        raise StructuralError("rank-one identity needs equal nonempty lengths")
    n = len(x)
    rows = [[(1 if i == j else 0) + x[i] * y[j] for j in range(n)] for i in range(n)]
    lhs = determinant(RingMatrix(ctx, rows))
    rhs = ctx.normal_form(sum((a * b for a, b in zip(x, y)), ctx.one()))
    return lhs, rhs


def invert_elementary_product(ops):
    """Inverse of ``E(ops[0]) ... E(ops[-1])`` as a shear list."""
    return [op.inverse() for op in reversed(ops)]


def is_skew_symmetric(m):
    if m.rows != m.cols:
        return False
    ctx = m.ctx
    for i in range(m.rows):
        if not ctx.is_zero(m[i, i]):
            return False
        for j in range(i + 1, m.cols):
            if not ctx.is_zero(m[i, j] + m[j, i]):
                return False
    return True


def block_diag(a, b):
    _same_ctx(a, b)
    zero = a.ctx.zero()
    rows = [list(r) + [zero] * b.cols for r in a.entries]
    rows += [[zero] * a.cols + list(r) for r in b.entries]
    return RingMatrix(a.ctx, rows, normalize=False)
