"""Two-by-two matrices with entries in the handle algebra.

Builders for the generator matrices A and B, the quantum determinant and
trace, the closed-form inverse of a unimodular matrix, the loop product
around both cycles of a handle, and the two one-sided products D = B A^-1
and C = B^-1 A that drive the power-map computation.
"""

from __future__ import annotations

from .matutil import mat_mul, mat_scale
from .ncpoly import HandleAlgebra, NcPoly
from .scalars import FormalScalar

# A 2x2 operator matrix is a plain [[.,.],[.,.]] list; entries are NcPoly
# (or anything with ring ops, the helpers do not care).


def matrix_a(alg: HandleAlgebra):
    return [[alg.ab("a11"), alg.ab("a12")], [alg.ab("a21"), alg.ab("a22")]]


def matrix_b(alg: HandleAlgebra):
    return [[alg.ab("b11"), alg.ab("b12")], [alg.ab("b21"), alg.ab("b22")]]


def quantum_det(m):
    """m11 m22 - q^2 m21 m12.  Equals 1 on the generator matrices."""
    q2 = FormalScalar.q_power(2)
    return m[0][0] * m[1][1] - q2 * (m[1][0] * m[0][1])


def quantum_trace(m):
    """q^-1 m11 + q m22.  On a generator matrix this commutes with all
    entries of the same matrix (it is the Casimir of the subalgebra they
    generate), but not with the other matrix."""
    return FormalScalar.q_power(-1) * m[0][0] + FormalScalar.q_power(1) * m[1][1]


def unimodular_inverse(m):
    """Two-sided inverse of a matrix whose quantum determinant is 1.

    [[q^2 m22 + (1-q^2) m11, -q^2 m12], [-q^2 m21, m11]]
    """
    one = FormalScalar.one()
    q2 = FormalScalar.q_power(2)
    return [
        [q2 * m[1][1] + (one - q2) * m[0][0], -(q2 * m[0][1])],
        [-(q2 * m[1][0]), m[0][0]],
    ]


def loop_matrix(alg: HandleAlgebra):
    """q^-3 B A^-1 B^-1 A, the product around both cycles of the handle.

    Its (1,1) entry coincides with HandleAlgebra.m11() and its quantum
    determinant is 1.
    """
    a, b = matrix_a(alg), matrix_b(alg)
    m = mat_mul(mat_mul(b, unimodular_inverse(a)),
                mat_mul(unimodular_inverse(b), a))
    return mat_scale(FormalScalar.q_power(-3), m)


def sided_products(alg: HandleAlgebra):
    """(D, C) with D = B A^-1 and C = B^-1 A.

    Both satisfy the same-matrix reflection identity; the pair satisfies
    the plus-conjugated exchange identity, and each has quantum
    determinant q^3.  The unscaled loop D C equals q^3 times loop_matrix.
    """
    a, b = matrix_a(alg), matrix_b(alg)
    return (mat_mul(b, unimodular_inverse(a)),
            mat_mul(unimodular_inverse(b), a))


def loop_entries_transversal(alg: HandleAlgebra):
    """Loop-matrix entries written in the transversal generators.

    m11 is a pure polynomial in the X's; m12 and m21 mix the X's with
    powers of a11 and b11.  Returned as a dict with keys m11, m12, m21
    (the last entry is determined by the determinant; see loop_m22_via_det).
    """
    x1, x2, x3, x4 = (alg.gen(n) for n in ("X1", "X2", "X3", "X4"))
    a, b = alg.gen("a11"), alg.gen("b11")
    ai, bi = alg.inv("a11"), alg.inv("b11")
    m11 = alg.m11()
    qm2 = FormalScalar.q_power(-2)
    q2 = FormalScalar.q_power(2)
    m12 = (-(qm2 * ((1 + x1 * x2) * x3 + x1))
           + qm2 * (x1 * m11 * bi * bi)
           + x3 * m11 * a * a * bi * bi)
    m21 = (-(qm2 * (x2 * (1 + x3 * x4) + x4))
           + x4 * m11 * ai * ai
           + q2 * (x2 * m11 * ai * ai * b * b))
    return {"m11": m11, "m12": m12, "m21": m21}


def loop_m22_via_det(m11_inv, m12, m21):
    """m22 = m11^-1 (1 + q^2 m21 m12), from quantum determinant 1.

    Meant for operator-level entries where m11 has an honest inverse.  In
    the symbolic engine the trace-entry inverse is only a formal letter,
    so the same content there is the product identity
    m11 m22 = 1 + q^2 m21 m12.
    """
    return m11_inv * (1 + FormalScalar.q_power(2) * (m21 * m12))


def transversal_roundtrip_residuals(alg: HandleAlgebra):
    """X_i minus its reconstruction from the matrix-entry images.

    All four residuals are zero: the change of generators is invertible
    modulo normal form.
    """
    back = alg.transversal_from_ab()
    return {n: alg.gen(n) - back[n] for n in ("X1", "X2", "X3", "X4")}
