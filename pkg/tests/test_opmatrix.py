"""Matrix-level identities for the handle generator matrices."""

import pytest

from graphalg.matutil import identity, mat_eq, mat_mul
from graphalg.ncpoly import HandleAlgebra, commutator
from graphalg.opmatrix import (loop_entries_transversal, loop_m22_via_det,
                               loop_matrix, matrix_a, matrix_b, quantum_det,
                               quantum_trace, sided_products,
                               transversal_roundtrip_residuals,
                               unimodular_inverse)
from graphalg.relations import (compile_template, instantiate,
                                tabulated_cross_handle,
                                tabulated_monodromy_handle)
from graphalg.scalars import FormalScalar


@pytest.fixture(scope="module")
def alg():
    return HandleAlgebra("formal")


def _flat(m):
    return [m[0][0], m[0][1], m[1][0], m[1][1]]


def test_unimodular_inverse_two_sided(alg):
    ident = identity(2, alg.one(), alg.zero())
    for mat in (matrix_a(alg), matrix_b(alg)):
        inv = unimodular_inverse(mat)
        assert mat_eq(mat_mul(mat, inv), ident)
        assert mat_eq(mat_mul(inv, mat), ident)


def test_quantum_det_of_generators(alg):
    assert quantum_det(matrix_a(alg)) == alg.one()
    assert quantum_det(matrix_b(alg)) == alg.one()


def test_quantum_trace_is_casimir_of_own_matrix(alg):
    tr = quantum_trace(matrix_a(alg))
    for name in ("a11", "a12", "a21", "a22"):
        assert commutator(tr, alg.ab(name)).is_zero()
    # but it is not central in the whole algebra
    assert not commutator(tr, alg.ab("b11")).is_zero()


def test_loop_matrix_entries(alg):
    m = loop_matrix(alg)
    forms = loop_entries_transversal(alg)
    assert m[0][0] == alg.m11()
    assert m[0][1] == forms["m12"]
    assert m[1][0] == forms["m21"]
    assert quantum_det(m) == alg.one()


def test_loop_m22_from_determinant(alg):
    # inverse-free form of the statement m22 = m11^-1 (1 + q^2 m21 m12)
    m = loop_matrix(alg)
    q2 = alg.scalar(FormalScalar.q_power(2))
    assert m[0][0] * m[1][1] == alg.one() + q2 * (m[1][0] * m[0][1])


def test_trace_inverse_commutes_with_loop_entry():
    alg = HandleAlgebra("formal", with_trace_inverse=True)
    assert commutator(alg.inv("M11"), alg.m11()).is_zero()


def test_loop_matrix_root_mode():
    alg = HandleAlgebra("root", p=3)
    m = loop_matrix(alg)
    assert m[0][0] == alg.m11()
    assert quantum_det(m) == alg.one()


def test_sided_products_have_det_q_cubed(alg):
    d, c = sided_products(alg)
    q3 = alg.scalar(FormalScalar.q_power(3))
    assert quantum_det(d) == q3
    assert quantum_det(c) == q3


def test_sided_products_satisfy_reflection(alg):
    d, c = sided_products(alg)
    one = alg.one()
    for mat in (d, c):
        images = _flat(mat) + _flat(mat)
        for res in compile_template("reflection"):
            assert instantiate(res, images, one).is_zero()


def test_sided_pair_exchange(alg):
    d, c = sided_products(alg)
    images = _flat(c) + _flat(d)
    one = alg.one()
    for res in compile_template("commute"):
        assert instantiate(res, images, one).is_zero()


def test_tabulated_cross_block_in_engine(alg):
    d, c = sided_products(alg)
    images = _flat(c) + _flat(d)
    one = alg.one()
    for res in tabulated_cross_handle():
        assert instantiate(res, images, one).is_zero()


def test_loop_reflection_with_generators(alg):
    m = loop_matrix(alg)
    one = alg.one()
    for other in (matrix_a(alg), matrix_b(alg), m):
        images = _flat(m) + _flat(other)
        for res in compile_template("reflection"):
            assert instantiate(res, images, one).is_zero()


def test_tabulated_monodromy_block_in_engine(alg):
    m = loop_matrix(alg)
    images = _flat(m) + _flat(matrix_a(alg))
    one = alg.one()
    for res in tabulated_monodromy_handle():
        assert instantiate(res, images, one).is_zero()


def test_loop_diagonal_exchange(alg):
    # the exchange weights that make the triangular factorization of the
    # loop matrix consistent: m11 m12 = q^-2 m12 m11, m11 m21 = q^2 m21 m11
    m = loop_matrix(alg)
    m11, m12, m21 = m[0][0], m[0][1], m[1][0]
    assert (m11 * m12 - FormalScalar.q_power(-2) * (m12 * m11)).is_zero()
    assert (m11 * m21 - FormalScalar.q_power(2) * (m21 * m11)).is_zero()


def test_transversal_roundtrip():
    for alg in (HandleAlgebra("formal"), HandleAlgebra("root", p=3)):
        for name, res in transversal_roundtrip_residuals(alg).items():
            assert res.is_zero(), name
