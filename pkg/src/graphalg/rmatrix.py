"""The rank-1 braiding matrices, their inverses, and classical limits.

The two braidings on C^2 (x) C^2, with q = v^2 so the overall prefactors
q^{-1/2} and q^{1/2} are honest Laurent monomials:

    R_plus  = q^{-1/2} [[q,0,0,0],[0,1,q-q^{-1},0],[0,0,1,0],[0,0,0,q]]
    R_minus = q^{ 1/2} [[q^{-1},0,0,0],[0,1,0,0],[0,q^{-1}-q,1,0],[0,0,0,q^{-1}]]

They satisfy the braid form of the Yang-Baxter equation and are exchanged
through conjugation by the flip:  R_plus = P R_minus^{-1} P.

Differentiating entrywise in q at q = 1 produces the classical r-matrices
r_plus and r_minus; their difference is the symmetric invariant 2-tensor.
"""

from __future__ import annotations

from fractions import Fraction

from .matutil import identity, kron, mat_add, mat_chain, mat_commutator, mat_eq, mat_map
from .scalars import FormalScalar

_ZERO = FormalScalar.zero()


def _m(rows):
    return [[e if isinstance(e, FormalScalar) else FormalScalar.rational(e) for e in row]
            for row in rows]


def _v(k, c=1):
    return FormalScalar.v_power(k, c)


def r_plus():
    # q^{-1/2} scaling already folded into each entry
    return _m([
        [_v(1), 0, 0, 0],
        [0, _v(-1), _v(1) - _v(-3), 0],
        [0, 0, _v(-1), 0],
        [0, 0, 0, _v(1)],
    ])


def r_plus_inv():
    return _m([
        [_v(-1), 0, 0, 0],
        [0, _v(1), _v(-1) - _v(3), 0],
        [0, 0, _v(1), 0],
        [0, 0, 0, _v(-1)],
    ])


def r_minus():
    return _m([
        [_v(-1), 0, 0, 0],
        [0, _v(1), 0, 0],
        [0, _v(-1) - _v(3), _v(1), 0],
        [0, 0, 0, _v(-1)],
    ])


def r_minus_inv():
    return _m([
        [_v(1), 0, 0, 0],
        [0, _v(-1), 0, 0],
        [0, _v(1) - _v(-3), _v(-1), 0],
        [0, 0, 0, _v(1)],
    ])


def flip():
    """The tensor-flip P on C^2 (x) C^2."""
    one = FormalScalar.one()
    z = _ZERO
    return [[one, z, z, z], [z, z, one, z], [z, one, z, z], [z, z, z, one]]


def formal_identity(n: int):
    return identity(n, FormalScalar.one(), _ZERO)


def qybe_residual(r):
    """R12 R13 R23 - R23 R13 R12 on the triple tensor square; zero iff QYBE holds."""
    i2 = formal_identity(2)
    p23 = kron(i2, flip())
    r12 = kron(r, i2)
    r23 = kron(i2, r)
    r13 = mat_chain(p23, r12, p23)
    lhs = mat_chain(r12, r13, r23)
    rhs = mat_chain(r23, r13, r12)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(lhs, rhs)]


def check_qybe(r) -> bool:
    return all(x.is_zero() for row in qybe_residual(r) for x in row)


def check_flip_exchange() -> bool:
    """R_plus == P R_minus^{-1} P (and hence R_minus == P R_plus^{-1} P)."""
    p = flip()
    return (mat_eq(r_plus(), mat_chain(p, r_minus_inv(), p))
            and mat_eq(r_minus(), mat_chain(p, r_plus_inv(), p)))


def specialize_matrix(m, p: int):
    """Entrywise image in Q(zeta_p)."""
    return mat_map(lambda e: e.specialize(p), m)


# ---------------------------------------------------------------------------
# classical limits
# ---------------------------------------------------------------------------


def classical_limit(r):
    """Entrywise d/dq at q = 1; the first-order part of the braiding."""
    return mat_map(lambda e: e.derivative_at_one(), r)


def classical_r_plus():
    return classical_limit(r_plus())


def classical_r_minus():
    return classical_limit(r_minus())


def casimir_tensor():
    """r_plus - r_minus: the symmetric invariant 2-tensor of sl2."""
    rp, rm = classical_r_plus(), classical_r_minus()
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(rp, rm)]


def rational_identity(n: int):
    return identity(n, Fraction(1), Fraction(0))


def cybe_residual(r):
    """[r12,r13] + [r12,r23] + [r13,r23] over Q; zero iff CYBE holds."""
    i2 = rational_identity(2)
    pq = mat_map(lambda e: e.evaluate_at_one(), flip())
    p23 = kron(i2, pq)
    r12 = kron(r, i2)
    r23 = kron(i2, r)
    r13 = mat_chain(p23, r12, p23)
    acc = mat_commutator(r12, r13)
    for term in (mat_commutator(r12, r23), mat_commutator(r13, r23)):
        acc = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(acc, term)]
    return acc


def check_cybe(r) -> bool:
    return all(x == 0 for row in cybe_residual(r) for x in row)


def sl2_basis():
    """e, f, h as rational 2x2 matrices."""
    e = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
    f = [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]]
    h = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]]
    return e, f, h


def ad_invariance_residual(x):
    """[x (x) 1 + 1 (x) x, casimir]; zero for every x in sl2."""
    i2 = rational_identity(2)
    big = mat_add(kron(x, i2), kron(i2, x))
    return mat_commutator(big, casimir_tensor())
