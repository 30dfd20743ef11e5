"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (not unimodular, antipodal,
undersampled, bad certificate, ...), 2 usage or syntax error.
"""

import argparse
import json
import sys

from . import certificates
from .errors import NotCompletable, ParseError, UnirowError, VanishingError
from .matrices import determinant, is_skew_symmetric
from .notation import parse_ops, parse_polynomial, parse_ring, parse_row
from .rings import RingContext, RingKind, format_polynomial
from .swan import swan_complete
from .topology import (
    Circle,
    Sphere2,
    elementary_path_check,
    eval_row_map,
    sample_variety,
    straight_line_homotopy_check,
    trace_to_csv,
    winding_report,
)
from .unimodular import (
    ElementaryFactorization,
    Provenance,
    UnimodularRow,
    apply_ops_mod,
    complete_with,
    conjugate_skew,
    euclid_complete,
    partial_unimodular_reduce,
    quaternion_left_matrix,
    reduce_row,
    skew_form,
    skew_matrix,
    transform_row_with_lift,
    unit_first_reduce,
    vaserstein_isotopy,
)

CIRCLE = "Q[x,y]/(x^2 + y^2 - 1)"


def _s(p):
    return format_polynomial(p)


def _row(args, ctx, name="row"):
    text = getattr(args, name)
    if text is None:
        raise ParseError(f"--{name.replace('_', '-')} is required")
    return parse_row(text, ctx)


def _ops(args, ctx, n):
    ops = parse_ops(args.ops or "", ctx)
    return ElementaryFactorization(n, ops)


def _is_unit_constant(p, ctx):
    if not p.is_constant() or p.is_zero():
        return False
    v = p.constant_value()
    return ctx.kind is not RingKind.INTEGERS or abs(v) == 1


def cmd_verify(args):
    ctx = parse_ring(args.ring)
    row = UnimodularRow(ctx, _row(args, ctx), _row(args, ctx, "witness"))
    return {"status": "OK", "row": [_s(x) for x in row.entries],
            "witness": [_s(x) for x in row.witness]}, "OK: sum(a_i * b_i) = 1"


def cmd_complete(args):
    ctx = parse_ring(args.ring)
    a = _row(args, ctx)
    n = len(a)
    if args.prefix_witness:
        d = parse_row(args.prefix_witness, ctx)
        if not 1 <= len(d) < n:
            raise ParseError("--prefix-witness needs between 1 and n-1 entries")
        row = UnimodularRow(ctx, a, tuple(d) + (ctx.zero(),) * (n - len(d)))
        f = partial_unimodular_reduce(row, len(d), d)
        cert = complete_with(row, f, Provenance.PARTIAL_UNIMODULAR)
    elif args.inverse:
        inv = parse_row(args.inverse, ctx)[0]
        row = UnimodularRow(ctx, a, (inv,) + (ctx.zero(),) * (n - 1))
        cert = complete_with(row, unit_first_reduce(row, inv), Provenance.UNIT_REDUCE)
    elif n == 2 and (ctx.kind in (RingKind.INTEGERS, RingKind.RATIONALS) or (
            ctx.kind is RingKind.POLYNOMIAL and len(ctx.variables) == 1)):
        _, cert = euclid_complete(a, ctx)
    elif _is_unit_constant(a[0], ctx):
        inv = ctx.element(1 / a[0].constant_value())
        row = UnimodularRow(ctx, a, (inv,) + (ctx.zero(),) * (n - 1))
        cert = complete_with(row, unit_first_reduce(row, inv), Provenance.UNIT_REDUCE)
    else:
        raise NotCompletable(
            "no completion strategy applies: give --prefix-witness or --inverse, "
            "or use a Euclidean ring for pairs"
        )
    return certificates.certificate_to_json(cert), _cert_text(cert)


def _cert_text(cert):
    m = cert.matrix
    lines = [f"completion certificate ({cert.provenance.value}) over {cert.row.ctx}"]
    lines += ["  [" + ", ".join(_s(x) for x in r) + "]" for r in m.entries]
    lines.append(f"  det = {_s(determinant(m))}")
    return "\n".join(lines)


def cmd_isotopy(args):
    ctx = parse_ring(args.ring)
    cert = vaserstein_isotopy(_row(args, ctx), _row(args, ctx, "witness"),
                              _row(args, ctx, "target_witness"), ctx, args.parameter)
    lines = [f"isotopy beta({args.parameter}) over {cert.beta.ctx}"]
    lines += ["  [" + ", ".join(_s(x) for x in r) + "]" for r in cert.beta.entries]
    return certificates.certificate_to_json(cert), "\n".join(lines)


def cmd_swan(args):
    ctx = parse_ring(args.ring)
    a = _row(args, ctx)
    w = _row(args, ctx, "witness")
    if len(a) != 3 or len(w) != 3:
        raise ParseError("swan needs a 3-entry --row and --witness")
    cert = swan_complete(*a, *w, ctx)
    return certificates.certificate_to_json(cert), _cert_text(cert)


def _quotient_for(base, mod_text):
    if mod_text is None:
        raise ParseError("--mod is required for lift")
    if base.kind is RingKind.INTEGERS:
        try:
            m = int(mod_text)
        except ValueError:
            raise ParseError("--mod must be an integer over Z", 0, mod_text) from None
        if m < 1:
            raise ParseError("--mod must be positive", 0, mod_text)
        return m
    if base.kind is not RingKind.POLYNOMIAL:
        raise ParseError("lift needs base ring Z or Q[vars]")
    g = parse_polynomial(mod_text, base.variables)
    if g.is_zero():
        raise ParseError("modulus must be nonzero", 0, mod_text)
    return RingContext.quotient(base.variables, g)


def cmd_lift(args):
    base = parse_ring(args.ring)
    quotient = _quotient_for(base, args.mod)
    row = UnimodularRow(base, _row(args, base), _row(args, base, "witness"))
    fbar = _ops(args, base, row.n)
    c, lift = transform_row_with_lift(row, fbar, quotient)
    reduced = reduce_row(c.entries, base, quotient)
    expected = apply_ops_mod(row.entries, fbar, base, quotient)
    data = {
        "lift": lift.to_json(),
        "row": [_s(x) for x in c.entries],
        "witness": [_s(x) for x in c.witness],
        "reduced_row": [_s(x) for x in reduced],
        "matches_quotient_action": reduced == expected,
    }
    text = f"lifted row ({', '.join(data['row'])}) with witness ({', '.join(data['witness'])})"
    return data, text


def cmd_skew(args):
    ctx = parse_ring(args.ring)
    v = skew_form(_row(args, ctx), _row(args, ctx, "witness"), ctx)
    return _matrix_report(v), _matrix_text("V(a, b)", v)


def cmd_conjugate(args):
    ctx = parse_ring(args.ring)
    row = UnimodularRow(ctx, _row(args, ctx), _row(args, ctx, "witness"))
    if row.n != 3:
        raise ParseError("conjugate needs a 3-entry row")
    tau = _ops(args, ctx, 3)
    v = skew_form(row.entries, row.witness, ctx)
    out = conjugate_skew(v, tau)
    moved = tau.apply(row.entries, ctx)
    inv_t = tau.inverse().matrix(ctx).transpose()
    moved_b = tuple(
        ctx.normal_form(sum((row.witness[k] * inv_t[k, j] for k in range(3)), ctx.zero()))
        for j in range(3)
    )
    data = _matrix_report(out)
    data["equals_transported_form"] = out == skew_matrix(moved, moved_b, ctx)
    return data, _matrix_text("beta^t V beta", out)


def cmd_quaternion(args):
    ctx = parse_ring(args.ring)
    q = _row(args, ctx)
    if len(q) != 4:
        raise ParseError("quaternion needs 4 components")
    m = quaternion_left_matrix(*q, ctx)
    return _matrix_report(m), _matrix_text("left multiplication", m)


def _matrix_report(m):
    return {"matrix": m.to_json(), "determinant": _s(determinant(m)),
            "skew_symmetric": is_skew_symmetric(m)}


def _matrix_text(title, m):
    lines = [f"{title} over {m.ctx}"]
    lines += ["  [" + ", ".join(_s(x) for x in r) + "]" for r in m.entries]
    lines.append(f"  det = {_s(determinant(m))}; skew-symmetric: {is_skew_symmetric(m)}")
    return "\n".join(lines)


def _sample(ctx, samples):
    if len(ctx.variables) == 2:
        return sample_variety(Circle(samples), ctx)
    return sample_variety(Sphere2(max(3, samples // 2 + 1), max(3, samples)), ctx)


def cmd_evaluate(args):
    ctx = parse_ring(args.ring)
    trace = eval_row_map(_row(args, ctx), _sample(ctx, args.samples))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(trace_to_csv(trace))
    data = {"min_norm": trace.min_norm, "points": int(len(trace.points))}
    return data, f"min norm over {data['points']} points: {trace.min_norm!r}"


def cmd_homotopy(args):
    ctx = parse_ring(args.ring)
    a = _row(args, ctx)
    sample = _sample(ctx, args.samples)
    if args.target_row:
        b = parse_row(args.target_row, ctx)
        ok, m = straight_line_homotopy_check(eval_row_map(a, sample), eval_row_map(b, sample),
                                             args.steps)
    else:
        ok, m = elementary_path_check(a, _ops(args, ctx, len(a)), ctx, sample, args.steps)
    data = {"ok": ok, "min_norm": m, "steps": args.steps}
    if not ok:
        raise VanishingError(f"homotopy vanishes on the sample (min norm {m!r})")
    return data, f"nonvanishing along the path; min norm {m!r}"


def cmd_winding(args):
    ctx = parse_ring(args.ring)
    row = _row(args, ctx)
    if len(row) != 2:
        raise ParseError("winding needs a 2-entry row")
    trace = eval_row_map(row, sample_variety(Circle(args.samples), ctx))
    rep = winding_report(trace.values)
    return rep, f"winding number {rep['winding']} (residual {rep['residual']:.3g})"


def cmd_verify_cert(args):
    with open(args.file, encoding="utf-8") as fh:
        cert = certificates.loads(fh.read())
    cert.verify()
    kind = "completion" if hasattr(cert, "provenance") else "isotopy"
    return {"status": "OK", "kind": kind}, f"OK: {kind} certificate verified"


def build_parser():
    p = argparse.ArgumentParser(prog="unirow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, ring="Z", **extra):
        sp = sub.add_parser(name)
        sp.set_defaults(fn=fn)
        sp.add_argument("--ring", default=ring)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out")
        for flag in extra.get("flags", ()):
            sp.add_argument(flag)
        return sp

    add("verify", cmd_verify, flags=("--row", "--witness"))
    add("complete", cmd_complete,
        flags=("--row", "--witness", "--prefix-witness", "--inverse"))
    sp = add("isotopy", cmd_isotopy, flags=("--row", "--witness", "--target-witness"))
    sp.add_argument("--parameter", default="t")
    add("swan", cmd_swan, flags=("--row", "--witness"))
    add("lift", cmd_lift, flags=("--row", "--witness", "--mod", "--ops"))
    add("skew", cmd_skew, flags=("--row", "--witness"))
    add("conjugate", cmd_conjugate, flags=("--row", "--witness", "--ops"))
    add("quaternion", cmd_quaternion, flags=("--row",))
    sp = add("evaluate", cmd_evaluate, ring=CIRCLE, flags=("--row", "--csv"))
    sp.add_argument("--samples", type=int, default=360)
    sp = add("homotopy", cmd_homotopy, ring=CIRCLE, flags=("--row", "--ops", "--target-row"))
    sp.add_argument("--samples", type=int, default=360)
    sp.add_argument("--steps", type=int, default=100)
    sp = add("winding", cmd_winding, ring=CIRCLE, flags=("--row",))
    sp.add_argument("--samples", type=int, default=360)
    sp = sub.add_parser("verify-cert")
    sp.set_defaults(fn=cmd_verify_cert)
    sp.add_argument("file")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out")
    return p


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _glue_negative_values(argv):
    """Rewrite ``--flag -x,...`` as ``--flag=-x,...`` so rows may start with a minus sign."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok.startswith("--") and "=" not in tok:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return exc.code
    try:
        data, text = args.fn(args)
    except ParseError as exc:
        _error(args, exc, 2)
        return 2
    except UnirowError as exc:
        _error(args, exc, 1)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit(json.dumps(data, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit(text + "\n", args.out)
    return 0


def _error(args, exc, status):
    payload = {"error": exc.code, "message": str(exc), "status": status}
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
