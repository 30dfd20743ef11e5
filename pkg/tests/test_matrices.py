import pytest
from _support import RNG, leibniz_det, random_ops, sphere_ctx

from unirow import (
    ElementaryOp,
    RingContext,
    RingMatrix,
    determinant,
    elementary_matrix,
    identity_matrix,
    invert_elementary_product,
    is_skew_symmetric,
    rank_one_det_identity,
)
from unirow.errors import StructuralError
from unirow.matrices import block_diag, cofactor_row, product_of_ops

Z = RingContext.integers()


def test_elementary_matrix_layout():
    e = elementary_matrix(3, ElementaryOp(1, 3, Z.element(5)), Z)
    assert e == RingMatrix(Z, [[1, 0, 5], [0, 1, 0], [0, 0, 1]])


def test_elementary_op_validation():
    with pytest.raises(StructuralError):
        ElementaryOp(2, 2, Z.element(1))
    with pytest.raises(StructuralError):
        ElementaryOp(0, 1, Z.element(1))
    with pytest.raises(StructuralError):
        elementary_matrix(2, ElementaryOp(1, 3, Z.element(1)), Z)


def test_product_matches_explicit_multiplication():
    rng = RNG(3)
    ctx = sphere_ctx()
    for _ in range(10):
        ops = random_ops(ctx, 3, rng, 4)
        explicit = identity_matrix(3, ctx)
        for op in ops:
            explicit = explicit @ elementary_matrix(3, op, ctx)
        assert product_of_ops(ops, 3, ctx) == explicit
        inv = product_of_ops(invert_elementary_product(ops), 3, ctx)
        assert (explicit @ inv).is_identity()


def test_determinant_against_permutation_sum():
    rng = RNG(11)
    for n in (1, 2, 3, 4):
        for _ in range(30):
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant(RingMatrix(Z, rows)) == leibniz_det(rows)


def test_symbolic_determinant_against_permutation_sum():
    ctx = RingContext.polynomial_ring(("a", "b", "c", "d", "e", "f", "g", "h", "i"))
    rows = [[ctx.var(v) for v in "abc"], [ctx.var(v) for v in "def"], [ctx.var(v) for v in "ghi"]]
    assert determinant(RingMatrix(ctx, rows)) == leibniz_det(rows)


def test_elementary_determinant_is_one_over_quotient():
    ctx = sphere_ctx()
    ops = random_ops(ctx, 4, RNG(5), 6, degree=2)
    assert ctx.is_one(determinant(product_of_ops(ops, 4, ctx)))


def test_cofactor_expansion():
    m = RingMatrix(Z, [[2, 7, 1], [0, 3, 4], [5, 1, 6]])
    c = cofactor_row(m)
    assert sum(x * y for x, y in zip(m.row(0), c)) == determinant(m)


def test_rank_one_identity_small_case():
    lhs, rhs = rank_one_det_identity([1, 2], [3, 4], Z)
    assert lhs == rhs == 12


def test_non_square_and_ragged():
    with pytest.raises(StructuralError):
        determinant(RingMatrix(Z, [[1, 2]]))
    with pytest.raises(StructuralError):
        RingMatrix(Z, [[1, 2], [3]])


def test_skew_and_block_diag():
    m = RingMatrix(Z, [[0, 2], [-2, 0]])
    assert is_skew_symmetric(m)
    assert not is_skew_symmetric(RingMatrix(Z, [[1, 2], [-2, 0]]))
    b = block_diag(identity_matrix(1, Z), m)
    assert b.shape == (3, 3) and b[1, 2] == 2 and b[0, 1] == 0


def test_json_round_trip():
    ctx = sphere_ctx()
    m = product_of_ops(random_ops(ctx, 3, RNG(2), 3), 3, ctx)
    assert RingMatrix.from_json(m.to_json(), ctx) == m


def test_immutable():
    m = identity_matrix(2, Z)
    with pytest.raises(AttributeError):
        m.rows = 3
