"""Small dense-matrix helpers over any ring-like entries.

Entries only need +, -, * (and == for comparisons).  Matrices are plain
lists of lists; nothing here mutates its arguments.  Used for scalar
matrices (Fraction, FormalScalar, RootScalar), operator matrices whose
entries are noncommutative polynomials, and sympy expressions alike.
"""

from __future__ import annotations


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = ai[0] * b[0][j]
            for t in range(1, k):
                acc = acc + ai[t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_chain(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = mat_mul(out, m)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not (x == y):
                return False
    return True


def mat_commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def identity(n: int, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def kron(a, b):
    na, nb = len(a), len(b)
    ma, mb = len(a[0]), len(b[0])
    out = []
    for i1 in range(na):
        for i2 in range(nb):
            row = []
            for j1 in range(ma):
                for j2 in range(mb):
                    row.append(a[i1][j1] * b[i2][j2])
            out.append(row)
    return out


def mat_map(f, a):
    return [[f(x) for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]
