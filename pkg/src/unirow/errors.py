"""Exception hierarchy.

Every domain failure carries a stable machine-readable ``code`` so the CLI
can report it without string matching.
"""


class UnirowError(Exception):
    code = "error"


class StructuralError(UnirowError, ValueError):
    """Shapes, variable lists or contexts do not line up."""

    code = "structural"


class ContextMismatch(StructuralError):
    code = "context_mismatch"


class ParseError(UnirowError, ValueError):
    code = "syntax"

    def __init__(self, message, position=None, text=None):
        self.message = message
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotUnimodularWithWitness(UnirowError):
    """The supplied witness does not satisfy sum(a_i * b_i) = 1."""

    code = "not_unimodular_with_witness"

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"witness identity fails; residual sum(a*b) - 1 = {residual}")


class NotUnimodular(UnirowError):
    code = "not_unimodular"

    def __init__(self, gcd):
        self.gcd = gcd
        super().__init__(f"row is not unimodular: gcd = {gcd} is not a unit")


class NotAnInverse(UnirowError):
    code = "not_an_inverse"


class NotCompletable(UnirowError):
    """No completion strategy applies to the given inputs."""

    code = "no_strategy"


class CertificateError(UnirowError):
    code = "bad_certificate"


class MembershipError(UnirowError):
    code = "not_on_variety"

    def __init__(self, offenders):
        self.offenders = offenders
        super().__init__(f"{len(offenders)} point(s) violate the modulus, e.g. {offenders[0]}")


class VanishingError(UnirowError):
    code = "vanishing"


class AntipodalError(UnirowError):
    code = "antipodal"


class UndersampledError(UnirowError):
    code = "undersampled"


class DegenerateLoopError(UnirowError):
    code = "degenerate_loop"
