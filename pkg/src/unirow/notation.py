"""Text grammar for polynomials, rows, ring specs and shear lists.

Polynomials: integers, ``p/q`` rationals, identifiers, ``+ - * / ^`` and
parentheses.  ``^`` takes a non-negative integer literal; ``/`` only divides
by a nonzero constant.  Juxtaposition (``2x``) is rejected.

Rings: ``Z``, ``Q``, ``Q[x,y]``, ``Q[x,y]/(x^2 + y^2 - 1)``.
"""

import re

from .errors import ParseError, StructuralError
from .rings import Polynomial, RingContext, format_polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))", re.S)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not m.group(0).strip():
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.text = text
        self.variables = tuple(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "name") or tok[1] == "(":
                self.fail("implicit multiplication is not allowed; use '*'")
            self.fail(f"unexpected {tok[1]!r}")
        return result

    def expr(self):
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self):
        left = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            tok = self.take()
            right = self.unary()
            if tok[1] == "*":
                left = left * right
            else:
                if not right.is_constant() or right.is_zero():
                    self.fail("can only divide by a nonzero constant", tok)
                left = left.scale(1 / right.constant_value())
        return left

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                self.fail("exponent must be a non-negative integer literal")
            self.take()
            base = base ** int(tok[1])
            if self.peek()[1] == "^" and self.peek()[0] == "op":
                self.fail("chained exponents are ambiguous; add parentheses")
        return base

    def atom(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "num":
            return Polynomial.constant(self.variables, int(value))
        if kind == "name":
            if value not in self.variables:
                self.fail(f"unknown variable {value!r}", tok)
            return Polynomial.var(self.variables, value)
        if value == "(":
            inner = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail(f"unexpected {value or 'end of input'!r}", tok)


def parse_polynomial(text, variables=()):
    """Parse ``text`` as a polynomial over ``variables``."""
    return _Parser(text, variables).parse()


def print_polynomial(f):
    return format_polynomial(f)


def _split_top(text, sep):
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((text[start:k], start))
            start = k + 1
    parts.append((text[start:], start))
    return parts


def parse_row(text, ctx):
    """Comma-separated ring elements, e.g. ``"x, y, x^2 + y^2"``."""
    out = []
    for piece, offset in _split_top(text, ","):
        try:
            out.append(ctx.element(parse_polynomial(piece, ctx.variables)))
        except ParseError as exc:
            pos = None if exc.position is None else exc.position + offset
            raise ParseError(exc.message, pos, text) from None
        except StructuralError as exc:
            raise ParseError(str(exc), offset, text) from None
    return tuple(out)


def parse_ops(text, ctx):
    """Shear list ``"i,j,lambda; i,j,lambda"`` (1-based indices)."""
    from .matrices import ElementaryOp

    text = text.strip()
    if not text:
        return ()
    ops = []
    for piece, offset in _split_top(text, ";"):
        fields = _split_top(piece, ",")
        if len(fields) != 3:
            raise ParseError("each shear needs 'i,j,lambda'", offset, text)
        try:
            i, j = int(fields[0][0]), int(fields[1][0])
        except ValueError:
            raise ParseError("shear indices must be integers", offset, text) from None
        lam = parse_row(fields[2][0], ctx)[0]
        try:
            ops.append(ElementaryOp(i, j, lam))
        except StructuralError as exc:
            raise ParseError(str(exc), offset, text) from None
    return tuple(ops)


_RING = re.compile(r"\s*Q\s*\[\s*([^\]]*)\]\s*(?:/\s*\((.*)\)\s*)?$", re.S)


def parse_ring(text):
    """``Z | Q | Q[v1,...,vk] | Q[v1,...,vk]/(poly)`` -> :class:`RingContext`."""
    s = text.strip()
    if s == "Z":
        return RingContext.integers()
    if s == "Q":
        return RingContext.rationals()
    m = _RING.match(text)
    if not m:
        raise ParseError("ring must be Z, Q, Q[vars] or Q[vars]/(poly)", 0, text)
    names = [v.strip() for v in m.group(1).split(",")]
    if not names or any(not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", v) for v in names):
        raise ParseError("bad variable list", m.start(1), text)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable", m.start(1), text)
    if m.group(2) is None:
        return RingContext.polynomial_ring(names)
    try:
        modulus = parse_polynomial(m.group(2), names)
    except ParseError as exc:
        pos = None if exc.position is None else exc.position + m.start(2)
        raise ParseError(exc.message, pos, text) from None
    if modulus.is_zero():
        raise ParseError("modulus must be nonzero", m.start(2), text)
    return RingContext.quotient(names, modulus)

