"""Exact linear algebra over any field given by duck-typed elements.

Elements must support +, -, *, equality with themselves, ``is_zero()`` and
``inverse()`` (RootScalar does; RationalExpr gets a tiny shim here).  Rows
are plain lists.  No fraction-free tricks, just Gauss-Jordan with exact
division, which is fine at the sizes this package meets.
"""

from __future__ import annotations

from .scalars import RationalExpr


def _inv(x):
    if hasattr(x, "inverse"):
        return x.inverse()
    if isinstance(x, RationalExpr):
        return RationalExpr(x.den, x.num)
    raise TypeError(f"no inverse for {type(x)}")


def rref(rows: list[list], keep_zero_rows: bool = False) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (new rows); returns (rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = _inv(mat[r][c])
        mat[r] = [inv * x for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    out = mat if keep_zero_rows else [row for row in mat if any(not x.is_zero() for x in row)]
    return out, pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[list], zero, one) -> list[list]:
    """Basis of the right kernel of the matrix given by rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for i, pc in enumerate(pivots):
            # pivot row i reads x_pc + sum_j red[i][j] x_j = 0 over free j
            vec[pc] = zero - red[i][fc]
        basis.append(vec)
    return basis


def solve_in_span(rows: list[list], target: list) -> bool:
    """Is target in the row span?"""
    red, _ = rref(rows)
    vec = list(target)
    ncols = len(vec)
    for row in red:
        lead = next((c for c in range(ncols) if not row[c].is_zero()), None)
        if lead is None:
            continue
        f = vec[lead]
        if not f.is_zero():
            vec = [x - f * y for x, y in zip(vec, row)]
    return all(x.is_zero() for x in vec)


def span_equal(rows_a: list[list], rows_b: list[list]) -> bool:
    red_a, piv_a = rref(rows_a)
    red_b, piv_b = rref(rows_b)
    if piv_a != piv_b or len(red_a) != len(red_b):
        return False
    for ra, rb in zip(red_a, red_b):
        for x, y in zip(ra, rb):
            if not (x - y).is_zero():
                return False
    return True


def intersect_with_kernel(basis: list[list], op_rows: list[list], zero, one) -> list[list]:
    """Given a subspace basis (as column coordinate vectors) and a linear map
    presented on the ambient space, return a basis of {v in span(basis) :
    op v = 0}, expressed again as ambient vectors."""
    if not basis:
        return []
    # image of each basis vector under the map
    images = []
    for vec in basis:
        img = []
        for row in op_rows:
            acc = zero
            for a, b in zip(row, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            img.append(acc)
        images.append(img)
    # kernel of the coefficient matrix (columns = basis elements)
    coeff_rows = [[images[j][i] for j in range(len(basis))] for i in range(len(op_rows))]
    combos = nullspace(coeff_rows, zero, one)
    out = []
    for combo in combos:
        vec = [zero] * len(basis[0])
        for cj, bvec in zip(combo, basis):
            if cj.is_zero():
                continue
            vec = [x + cj * y for x, y in zip(vec, bvec)]
        out.append(vec)
    return out
