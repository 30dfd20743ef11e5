"""Exact polynomial arithmetic over the rationals and principal quotient rings.

A :class:`Polynomial` is a sparse map from exponent tuples to
:class:`fractions.Fraction` coefficients over a fixed, ordered list of
variable names.  Zero coefficients are never stored, so two polynomials are
equal exactly when their term maps are equal.

A :class:`RingContext` says which arithmetic applies: the integers, the
rationals, a polynomial ring ``Q[x1, ..., xk]`` or a principal quotient
``Q[x1, ..., xk]/(f)``.  Elements of every context are plain polynomials
(constants for ``Z`` and ``Q``); the context owns coercion and reduction to
normal form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import ContextMismatch, StructuralError


class MonomialOrder(enum.Enum):
    DEGLEX = "deglex"
    LEX = "lex"

    def key(self, exps):
        # variable precedence is declaration order
        if self is MonomialOrder.DEGLEX:
            return (sum(exps), exps)
        return exps


DEGLEX = MonomialOrder.DEGLEX
LEX = MonomialOrder.LEX


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class Polynomial:
    """Multivariate polynomial with exact rational coefficients.

    Instances are immutable; arithmetic returns new objects.  Integers and
    fractions are accepted as the other operand of ``+ - *``.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables=(), terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise StructuralError(f"duplicate variable in {variables}")
        object.__setattr__(self, "variables", variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables) or any(e < 0 for e in exps):
                raise StructuralError(f"bad exponent vector {exps} for variables {variables}")
            c = _as_fraction(c)
            if c:
                clean[exps] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # construction helpers

    @classmethod
    def _raw(cls, variables, terms):
        # trusted fast path: terms already canonical
        p = object.__new__(cls)
        object.__setattr__(p, "variables", variables)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        c = _as_fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def zero(cls, variables=()):
        return cls._raw(tuple(variables), {})

    @classmethod
    def one(cls, variables=()):
        return cls.constant(variables, 1)

    @classmethod
    def var(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise StructuralError(f"unknown variable {name!r}; have {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        return cls(variables, {tuple(exps): c})

    # predicates and accessors

    @property
    def nvars(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def constant_value(self):
        if not self.is_constant():
            raise StructuralError(f"{self} is not a constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        """Total degree; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_term(self, order=DEGLEX):
        if not self.terms:
            raise StructuralError("the zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def leading_coefficient(self, order=DEGLEX):
        return self.leading_term(order)[1]

    def sorted_terms(self, order=DEGLEX):
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise StructuralError(
                    f"variable lists differ: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Polynomial._raw(self.variables, {})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise StructuralError("exponent must be a non-negative integer")
        result = Polynomial.one(self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        c = _as_fraction(c)
        if not c:
            return Polynomial._raw(self.variables, {})
        return Polynomial._raw(self.variables, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.variables, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    # change of variables

    def embed(self, variables):
        """Re-express over a superset of the variables (term for term)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        missing = [v for v in self.variables if v not in variables]
        if missing and any(
            any(e[self.variables.index(v)] for v in missing) for e in self.terms
        ):
            raise StructuralError(f"cannot embed: variables {missing} are used")
        idx = [self.variables.index(v) if v in self.variables else None for v in variables]
        out = {}
        for e, c in self.terms.items():
            out[tuple(0 if i is None else e[i] for i in idx)] = c
        return Polynomial._raw(variables, out)

    def compose(self, values, variables=None):
        """Substitute ``values[k]`` for the k-th variable.

        ``values`` is a sequence (one per variable) or a dict name -> value;
        variables missing from a dict are kept as themselves.  Values are
        polynomials over ``variables`` (inferred from the first polynomial
        value when omitted), or rational constants.
        """
        if isinstance(values, dict):
            unknown = set(values) - set(self.variables)
            if unknown:
                raise StructuralError(f"unknown variables {sorted(unknown)}")
            seq = [values.get(v, v) for v in self.variables]
        else:
            seq = list(values)
            if len(seq) != self.nvars:
                raise StructuralError(f"need {self.nvars} values, got {len(seq)}")
        if variables is None:
            polys = [v for v in seq if isinstance(v, Polynomial)]
            variables = polys[0].variables if polys else self.variables
        variables = tuple(variables)
        subst = []
        for name, v in zip(self.variables, seq):
            if isinstance(v, str):
                v = Polynomial.var(variables, v)
            elif isinstance(v, Polynomial):
                v = v.embed(variables) if v.variables != variables else v
            else:
                v = Polynomial.constant(variables, v)
            subst.append(v)
        cache = [dict() for _ in subst]

        def power(k, e):
            got = cache[k].get(e)
            if got is None:
                got = subst[k] ** e
                cache[k][e] = got
            return got

        result = Polynomial.zero(variables)
        for exps, c in self.terms.items():
            term = Polynomial.constant(variables, c)
            for k, e in enumerate(exps):
                if e:
                    term = term * power(k, e)
            result = result + term
        return result

    def evaluate(self, point):
        """Evaluate at a point, exactly when every coordinate is int or Fraction."""
        if len(point) != self.nvars:
            raise StructuralError(f"point has {len(point)} coordinates, need {self.nvars}")
        exact = all(isinstance(x, (int, Fraction)) for x in point)
        total = Fraction(0) if exact else 0.0
        for exps, c in self.terms.items():
            term = c if exact else float(c)
            for x, e in zip(point, exps):
                for _ in range(e):
                    term *= x
            total += term
        return total

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.variables}, {format_polynomial(self)!r})"


def _format_coefficient(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(variables, exps):
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(f, order=DEGLEX):
    """Canonical text: terms in decreasing ``order``, e.g. ``x^2 - 3/2*x*y + 1``."""
    if not f.terms:
        return "0"
    out = []
    for k, (exps, c) in enumerate(f.sorted_terms(order)):
        mono = _format_monomial(f.variables, exps)
        mag = abs(c)
        if not mono:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coefficient(mag)}*{mono}"
        if k == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def poly_divmod(f, g, order=DEGLEX):
    """Single-divisor multivariate division: ``f = q*g + r``.

    No term of ``r`` is divisible by the leading term of ``g`` under ``order``.
    """
    if f.variables != g.variables:
        raise StructuralError(f"variable lists differ: {f.variables} vs {g.variables}")
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lt_exps, lt_coef = g.leading_term(order)
    variables = f.variables
    q = {}
    r = {}
    p = dict(f.terms)
    key = order.key
    while p:
        exps = max(p, key=key)
        c = p[exps]
        if all(a >= b for a, b in zip(exps, lt_exps)):
            shift = tuple(a - b for a, b in zip(exps, lt_exps))
            factor = c / lt_coef
            q[shift] = q.get(shift, 0) + factor
            for ge, gc in g.terms.items():
                e = tuple(a + b for a, b in zip(shift, ge))
                s = p.get(e, 0) - factor * gc
                if s:
                    p[e] = s
                else:
                    p.pop(e, None)
        else:
            r[exps] = c
            del p[exps]
    q = {e: c for e, c in q.items() if c}
    return Polynomial._raw(variables, q), Polynomial._raw(variables, r)


def poly_arith(f, g, op):
    """Dispatch ``add``/``sub``/``mul``/``neg``; ``g`` is ignored for ``neg``."""
    if op == "neg":
        return -f
    if f.variables != g.variables:
        raise StructuralError(f"variable lists differ: {f.variables} vs {g.variables}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise StructuralError(f"unknown operation {op!r}")


def eval_poly(f, point):
    return f.evaluate(point)


class RingKind(enum.Enum):
    INTEGERS = "Z"
    RATIONALS = "Q"
    POLYNOMIAL = "poly"
    QUOTIENT = "quotient"


@dataclass(frozen=True)
class RingContext:
    """Which arithmetic applies to ring elements.

    Build with :meth:`integers`, :meth:`rationals`, :meth:`polynomial_ring`
    or :meth:`quotient` rather than the raw constructor.
    """

    kind: RingKind
    variables: tuple = ()
    modulus: Polynomial | None = None
    order: MonomialOrder = DEGLEX

    @classmethod
    def integers(cls):
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls):
        return cls(RingKind.RATIONALS)

    @classmethod
    def polynomial_ring(cls, variables):
        variables = tuple(variables)
        _check_names(variables)
        return cls(RingKind.POLYNOMIAL, variables)

    @classmethod
    def quotient(cls, variables, modulus, order=DEGLEX):
        variables = tuple(variables)
        _check_names(variables)
        if isinstance(modulus, str):
            from .notation import parse_polynomial

            modulus = parse_polynomial(modulus, variables)
        modulus = modulus.embed(variables) if modulus.variables != variables else modulus
        if modulus.is_zero():
            raise StructuralError("quotient modulus must be nonzero")
        modulus = modulus.scale(1 / modulus.leading_coefficient(order))
        return cls(RingKind.QUOTIENT, variables, modulus, order)

    # element handling

    @property
    def is_quotient(self):
        return self.kind is RingKind.QUOTIENT

    def zero(self):
        return Polynomial.zero(self.variables)

    def one(self):
        return Polynomial.one(self.variables)

    def var(self, name):
        return Polynomial.var(self.variables, name)

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def normal_form(self, f):
        if f.variables != self.variables:
            raise ContextMismatch(f"element over {f.variables} used in ring {self}")
        if self.kind is RingKind.QUOTIENT:
            return poly_divmod(f, self.modulus, self.order)[1]
        return f

    def element(self, value):
        """Coerce int / Fraction / str / Polynomial into a normalized element."""
        if isinstance(value, str):
            from .notation import parse_polynomial

            value = parse_polynomial(value, self.variables)
        elif isinstance(value, Polynomial):
            if value.variables != self.variables:
                value = value.embed(self.variables)
        else:
            value = Polynomial.constant(self.variables, value)
        if self.kind is RingKind.INTEGERS:
            if not value.is_constant() or value.constant_value().denominator != 1:
                raise StructuralError(f"{value} is not an integer")
        return self.normal_form(value)

    def elements(self, values):
        return tuple(self.element(v) for v in values)

    def equal(self, f, g):
        return self.normal_form(f - g).is_zero()

    def is_zero(self, f):
        return self.normal_form(f).is_zero()

    def is_one(self, f):
        return self.normal_form(f - 1).is_zero()

    def extend_with_variable(self, name):
        return extend_with_variable(self, name)

    def base_ring(self):
        """The polynomial ring a quotient is taken of (identity otherwise)."""
        if self.kind is RingKind.QUOTIENT:
            return RingContext.polynomial_ring(self.variables)
        return self

    def __str__(self):
        if self.kind is RingKind.INTEGERS:
            return "Z"
        if self.kind is RingKind.RATIONALS:
            return "Q"
        head = f"Q[{','.join(self.variables)}]"
        if self.kind is RingKind.POLYNOMIAL:
            return head
        return f"{head}/({format_polynomial(self.modulus, self.order)})"

    def to_json(self):
        data = {"kind": self.kind.value, "variables": list(self.variables)}
        if self.modulus is not None:
            data["modulus"] = format_polynomial(self.modulus, self.order)
            data["order"] = self.order.value
        return data

    @classmethod
    def from_json(cls, data):
        kind = RingKind(data["kind"])
        if kind is RingKind.INTEGERS:
            return cls.integers()
        if kind is RingKind.RATIONALS:
            return cls.rationals()
        if kind is RingKind.POLYNOMIAL:
            return cls.polynomial_ring(data["variables"])
        return cls.quotient(
            data["variables"], data["modulus"], MonomialOrder(data.get("order", "deglex"))
        )


def _check_names(variables):
    import re

    for v in variables:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", v):
            raise StructuralError(f"invalid variable name {v!r}")
    if len(set(variables)) != len(variables):
        raise StructuralError(f"duplicate variable in {variables}")


def normal_form(f, ctx):
    return ctx.normal_form(f)


def extend_with_variable(ctx, name):
    """Append one variable; the modulus (if any) is carried over unchanged."""
    if name in ctx.variables:
        raise StructuralError(f"variable {name!r} already present")
    variables = ctx.variables + (name,)
    _check_names(variables)
    if ctx.kind is RingKind.QUOTIENT:
        return RingContext(RingKind.QUOTIENT, variables, ctx.modulus.embed(variables), ctx.order)
    # Z and Q become univariate polynomial rings over Q
    return RingContext.polynomial_ring(variables)
