"""JSON form of completion and isotopy certificates.

Serialization is canonical (sorted keys, fixed indentation), so identical
certificates give identical bytes.  Loading re-runs every invariant, so a
tampered file raises :class:`~unirow.errors.CertificateError`.
"""

import json

from .errors import CertificateError, UnirowError
from .matrices import ElementaryOp, RingMatrix
from .rings import RingContext, format_polynomial
from .unimodular import (
    CompletionCertificate,
    ElementaryFactorization,
    IsotopyCertificate,
    Provenance,
    UnimodularRow,
)


def _strs(values):
    return [format_polynomial(v) for v in values]


def certificate_to_json(cert):
    if isinstance(cert, CompletionCertificate):
        f = cert.factorization
        return {
            "kind": "completion",
            "ring": cert.row.ctx.to_json(),
            "row": _strs(cert.row.entries),
            "witness": _strs(cert.row.witness),
            "factorization": None if f is None else f.to_json(),
            "matrix": cert.matrix.to_json(),
            "provenance": cert.provenance.value,
        }
    if isinstance(cert, IsotopyCertificate):
        return {
            "kind": "isotopy",
            "ring": cert.ctx.to_json(),
            "parameter": cert.parameter,
            "row": _strs(cert.row),
            "witness": _strs(cert.source),
            "target_witness": _strs(cert.target),
            "factorization": None,
            "matrix": cert.beta.to_json(),
            "provenance": "Vaserstein",
        }
    raise TypeError(f"not a certificate: {type(cert).__name__}")


def dumps(cert):
    return json.dumps(certificate_to_json(cert), sort_keys=True, indent=2) + "\n"


def certificate_from_json(data):
    """Rebuild (and thereby re-verify) a certificate from its JSON form."""
    try:
        ctx = RingContext.from_json(data["ring"])
        kind = data["kind"]
        if kind == "completion":
            row = UnimodularRow(ctx, ctx.elements(data["row"]), ctx.elements(data["witness"]))
            matrix = RingMatrix.from_json(data["matrix"], ctx)
            f = None
            if data.get("factorization") is not None:
                ops = tuple(ElementaryOp(int(i), int(j), ctx.element(lam))
                            for i, j, lam in data["factorization"])
                f = ElementaryFactorization(row.n, ops)
            return CompletionCertificate(row, matrix, Provenance(data["provenance"]), f)
        if kind == "isotopy":
            parameter = data["parameter"]
            ext = ctx.extend_with_variable(parameter)
            beta = RingMatrix.from_json(data["matrix"], ext)
            return IsotopyCertificate(
                ctx,
                parameter,
                beta,
                ctx.elements(data["row"]),
                ctx.elements(data["witness"]),
                ctx.elements(data["target_witness"]),
                len(data["row"]) < 3,
            )
        raise CertificateError(f"unknown certificate kind {kind!r}")
    except CertificateError:
        raise
    except (UnirowError, KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"invalid certificate: {exc}") from exc


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"certificate is not valid JSON: {exc}") from exc
    return certificate_from_json(data)


def verify_certificate(cert):
    """Re-check a certificate object; returns True or raises CertificateError."""
    return cert.verify()
