"""Engine verification of the three power-identity families."""

import pytest

from graphalg.lemmas import (frobenius_additivity_residual, q_binomial,
                             q_rising, reorder_residual,
                             twisted_power_residual, verify_frobenius_additivity,
                             verify_reordering, verify_twisted_powers)
from graphalg.ncpoly import HandleAlgebra
from graphalg.scalars import FormalScalar, q_factorial, q_int


def test_q_binomial_factorial_identity():
    for m in range(0, 7):
        for k in range(0, m + 1):
            lhs = q_binomial(m, k) * q_factorial(k) * q_factorial(m - k)
            assert lhs == q_factorial(m)


def test_q_rising_matches_factorials():
    for n in range(0, 6):
        for k in range(0, n + 1):
            assert q_rising(n, k) * q_factorial(n - k) == q_factorial(n)


def test_reordering_hypothesis():
    alg = HandleAlgebra("formal")
    z, w = alg.gen("X1"), alg.gen("X2")
    c = FormalScalar.q_power(2) - FormalScalar.one()
    assert (z * w - FormalScalar.q_power(2) * (w * z) - alg.scalar(c)).is_zero()


def test_reordering_all_small():
    for row in verify_reordering(4, 4):
        assert row["ok"], row["name"]


def test_reordering_bottom_edge():
    alg = HandleAlgebra("formal")
    assert reorder_residual(alg, 0, 3).is_zero()
    assert reorder_residual(alg, 1, 1).is_zero()


def test_additivity_p3_p5():
    for p in (3, 5):
        for row in verify_frobenius_additivity(p):
            assert row["ok"], row["name"]


def test_additivity_needs_primitive_weight():
    alg = HandleAlgebra("root", p=3)
    # a11 b11 = q b11 a11 still works at a primitive root: q itself has
    # order p, and any primitive weight gives vanishing binomials
    assert frobenius_additivity_residual(alg.gen("a11"), alg.gen("b11"), 3).is_zero()
    # a commuting pair (weight 1) is the real negative control
    r = frobenius_additivity_residual(alg.gen("a11"), alg.gen("X1"), 3)
    assert not r.is_zero()


def test_twisted_powers_p3_p5():
    for p in (3, 5):
        for row in verify_twisted_powers(p):
            assert row["ok"], row["name"]


def test_twisted_power_generic_central_c():
    # c can be a central element, not just a constant, as long as the
    # hypothesis z w - c = q^-2 (w z - c) holds: rescale the (X2, X1, -1)
    # instance by central factors a11^p and b11^p
    p = 3
    alg = HandleAlgebra("root", p=p)
    z = alg.gen("a11") ** p * alg.gen("X2")
    w = alg.gen("b11") ** p * alg.gen("X1")
    c = -(alg.gen("a11") ** p * alg.gen("b11") ** p)
    hyp = (z * w - c) - FormalScalar.q_power(-2) * (w * z - c)
    assert hyp.is_zero()
    assert twisted_power_residual(z, w, c, p).is_zero()
