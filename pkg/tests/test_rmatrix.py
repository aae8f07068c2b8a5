"""Tests for the braiding matrices and their classical limits."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from graphalg.matutil import kron, mat_chain, mat_eq, mat_sub
from graphalg.rmatrix import (
    ad_invariance_residual,
    casimir_tensor,
    check_cybe,
    check_flip_exchange,
    check_qybe,
    classical_r_minus,
    classical_r_plus,
    flip,
    formal_identity,
    r_minus,
    r_minus_inv,
    r_plus,
    r_plus_inv,
    rational_identity,
    sl2_basis,
    specialize_matrix,
)
from graphalg.scalars import CyclotomicField


def test_inverses():
    i4 = formal_identity(4)
    assert mat_eq(mat_chain(r_plus(), r_plus_inv()), i4)
    assert mat_eq(mat_chain(r_plus_inv(), r_plus()), i4)
    assert mat_eq(mat_chain(r_minus(), r_minus_inv()), i4)
    assert mat_eq(mat_chain(r_minus_inv(), r_minus()), i4)


def test_qybe_formal():
    assert check_qybe(r_plus())
    assert check_qybe(r_minus())


def test_qybe_at_roots():
    for p in (3, 5):
        for r in (r_plus(), r_minus()):
            rs = specialize_matrix(r, p)
            # redo the triple-tensor identity over the cyclotomic field
            field = CyclotomicField.get(p)
            i2 = [[field.one(), field.zero()], [field.zero(), field.one()]]
            ps = specialize_matrix(flip(), p)
            p23 = kron(i2, ps)
            r12 = kron(rs, i2)
            r23 = kron(i2, rs)
            r13 = mat_chain(p23, r12, p23)
            lhs = mat_chain(r12, r13, r23)
            rhs = mat_chain(r23, r13, r12)
            assert all(x.is_zero() for row in mat_sub(lhs, rhs) for x in row)


def test_flip_exchange():
    assert check_flip_exchange()


def test_classical_r_matrices_frozen():
    h = Fraction(1, 2)
    assert classical_r_plus() == [
        [h, 0, 0, 0],
        [0, -h, 2, 0],
        [0, 0, -h, 0],
        [0, 0, 0, h],
    ]
    assert classical_r_minus() == [
        [-h, 0, 0, 0],
        [0, h, 0, 0],
        [0, -2, h, 0],
        [0, 0, 0, -h],
    ]


def test_r_minus_is_minus_flipped_r_plus():
    p1 = [[Fraction(int(x.evaluate_at_one())) for x in row] for row in flip()]
    conj = mat_chain(p1, classical_r_plus(), p1)
    assert classical_r_minus() == [[-x for x in row] for row in conj]


def test_cybe():
    assert check_cybe(classical_r_plus())
    assert check_cybe(classical_r_minus())


def test_casimir_frozen_and_symmetric():
    c = casimir_tensor()
    assert c == [
        [1, 0, 0, 0],
        [0, -1, 2, 0],
        [0, 2, -1, 0],
        [0, 0, 0, 1],
    ]
    p1 = [[Fraction(int(x.evaluate_at_one())) for x in row] for row in flip()]
    assert mat_eq(mat_chain(p1, c, p1), c)


def test_casimir_ad_invariance_basis():
    for x in sl2_basis():
        assert all(v == 0 for row in ad_invariance_residual(x) for v in row)


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                min_size=3, max_size=3))
@settings(max_examples=40, deadline=None)
def test_casimir_ad_invariance_random(coeffs):
    e, f, h = sl2_basis()
    ce, cf, ch = coeffs
    x = [[ce * e[i][j] + cf * f[i][j] + ch * h[i][j] for j in range(2)] for i in range(2)]
    assert all(v == 0 for row in ad_invariance_residual(x) for v in row)
