"""Exact certificates for unimodular rows and their sampled topological shadows."""

from .errors import UnirowError
from .matrices import (
    ElementaryOp,
    RingMatrix,
    determinant,
    elementary_matrix,
    identity_matrix,
    invert_elementary_product,
    is_skew_symmetric,
    mat_mul,
    rank_one_det_identity,
)
from .notation import parse_polynomial, parse_ring, parse_row
from .rings import (
    DEGLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    RingContext,
    eval_poly,
    extend_with_variable,
    normal_form,
    poly_arith,
    poly_divmod,
)
from .swan import swan_complete
from .unimodular import (
    CompletionCertificate,
    ElementaryFactorization,
    IsotopyCertificate,
    Provenance,
    UnimodularRow,
    apply_elementary_with_witness,
    conjugate_skew,
    euclid_complete,
    factorization_path,
    lift_elementary_factorization,
    partial_unimodular_reduce,
    quaternion_left_matrix,
    skew_form,
    transform_row_with_lift,
    unit_first_reduce,
    vaserstein_isotopy,
    verify_unimodular,
)

__version__ = "0.1.0"
