"""Commutative counterpart: quadratic holonomy brackets, flatness, and
the factorization of the multi-handle loop products.

Symbolic work (bracket tables, Jacobi, Casimir checks) runs on sympy
expressions; numeric work (sampled points, loop products, factorization
routes) stays in exact Fractions.
"""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from .matutil import identity, mat_chain, mat_eq, mat_mul, mat_scale, mat_sub
from .rmatrix import classical_r_minus, classical_r_plus

# ---------------------------------------------------------------------------
# symbols and bracket tables
# ---------------------------------------------------------------------------


def holonomy_symbols(g: int):
    """Per-handle 2x2 symbol matrices for the A and B holonomies.

    All eight entries per handle are independent symbols; both
    determinants are Casimir functions of the bracket, so imposing
    det = 1 afterwards is consistent.
    """
    out = []
    for i in range(1, g + 1):
        a = [[sympy.Symbol(f"a{i}_{m}{n}") for n in (1, 2)] for m in (1, 2)]
        b = [[sympy.Symbol(f"b{i}_{m}{n}") for n in (1, 2)] for m in (1, 2)]
        out.append({"a": a, "b": b})
    return out


def _sym_mat(fr_mat):
    return [[sympy.Rational(x.numerator, x.denominator) for x in row]
            for row in fr_mat]


def _embed_first(m):
    z = sympy.Integer(0)
    out = [[z] * 4 for _ in range(4)]
    for i1 in range(2):
        for j1 in range(2):
            for i2 in range(2):
                out[2 * i1 + i2][2 * j1 + i2] = m[i1][j1]
    return out


def _embed_second(m):
    z = sympy.Integer(0)
    out = [[z] * 4 for _ in range(4)]
    for i2 in range(2):
        for j2 in range(2):
            for i1 in range(2):
                out[2 * i1 + i2][2 * i1 + j2] = m[i2][j2]
    return out


def _pair_block(u, v, kind: str):
    """4x4 matrix of brackets {u_(i1 j1), v_(i2 j2)}.

    kind chooses the combination of r = r_plus and rb = r_minus:
      same_refl : u1 r v2 - v2 u1 r - rb v2 u1 + v2 rb u1   (A-A, B-B)
      same_mixed: u1 r v2 - v2 u1 r - r  v2 u1 + v2 rb u1   (A-B, one handle)
      cross     : u1 r v2 - v2 u1 r - r  v2 u1 + v2 r  u1   (different handles)
    """
    r = _sym_mat(classical_r_plus())
    rb = _sym_mat(classical_r_minus())
    u1, v2 = _embed_first(u), _embed_second(v)
    t1 = mat_chain(u1, r, v2)
    t2 = mat_chain(v2, u1, r)
    if kind == "same_refl":
        t3, t4 = mat_chain(rb, v2, u1), mat_chain(v2, rb, u1)
    elif kind == "same_mixed":
        t3, t4 = mat_chain(r, v2, u1), mat_chain(v2, rb, u1)
    elif kind == "cross":
        t3, t4 = mat_chain(r, v2, u1), mat_chain(v2, r, u1)
    else:
        raise ValueError(kind)
    return mat_sub(mat_sub(t1, t2), mat_sub(t3, t4))


def _enter(table, u, v, block):
    for i1 in range(2):
        for j1 in range(2):
            for i2 in range(2):
                for j2 in range(2):
                    key = (u[i1][j1], v[i2][j2])
                    val = sympy.expand(block[2 * i1 + i2][2 * j1 + j2])
                    if key in table:
                        # the same unordered entry pair can appear at two
                        # positions of a same-matrix block; they must agree
                        if sympy.expand(table[key] - val) != 0:
                            raise ValueError(f"inconsistent block for {key}")
                    else:
                        table[key] = val


def bracket_table(g: int):
    """All generator brackets {u, v} as a dict keyed by symbol pairs.

    Both orders are stored; diagonal entries are zero.
    """
    hs = holonomy_symbols(g)
    table: dict = {}
    for i in range(g):
        _enter(table, hs[i]["a"], hs[i]["a"], _pair_block(hs[i]["a"], hs[i]["a"], "same_refl"))
        _enter(table, hs[i]["b"], hs[i]["b"], _pair_block(hs[i]["b"], hs[i]["b"], "same_refl"))
        _enter(table, hs[i]["a"], hs[i]["b"], _pair_block(hs[i]["a"], hs[i]["b"], "same_mixed"))
        for j in range(i + 1, g):
            for x, y in (("a", "a"), ("a", "b"), ("b", "b"), ("b", "a")):
                _enter(table, hs[i][x], hs[j][y],
                       _pair_block(hs[i][x], hs[j][y], "cross"))
    # antisymmetric completion for every pair seen in one order only
    for (u, v), val in list(table.items()):
        rev = (v, u)
        if rev not in table:
            table[rev] = sympy.expand(-val)
    for s in all_entry_symbols(g):
        table[(s, s)] = sympy.Integer(0)
    return table


def all_entry_symbols(g: int):
    syms = []
    for h in holonomy_symbols(g):
        for m in (0, 1):
            for n in (0, 1):
                syms.append(h["a"][m][n])
        for m in (0, 1):
            for n in (0, 1):
                syms.append(h["b"][m][n])
    return syms


def poisson_bracket(f, h, table, syms):
    """Extend the generator table to arbitrary expressions by Leibniz."""
    total = sympy.Integer(0)
    fd = {u: sympy.diff(f, u) for u in syms}
    hd = {v: sympy.diff(h, v) for v in syms}
    for u in syms:
        if fd[u] == 0:
            continue
        for v in syms:
            if hd[v] == 0:
                continue
            w = table.get((u, v))
            if w is None or w == 0:
                continue
            total += w * fd[u] * hd[v]
    return sympy.expand(total)


def jacobi_residual(f, h, k, table, syms):
    return sympy.expand(
        poisson_bracket(poisson_bracket(f, h, table, syms), k, table, syms)
        + poisson_bracket(poisson_bracket(h, k, table, syms), f, table, syms)
        + poisson_bracket(poisson_bracket(k, f, table, syms), h, table, syms))


def classical_det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


# ---------------------------------------------------------------------------
# numeric points: sampling, flatness, loop factorization
# ---------------------------------------------------------------------------


def det1_inverse(m):
    """Inverse of a 2x2 matrix with determinant 1."""
    return [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]


def _rand_fraction(rng, lo=-4, hi=4, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def _rand_nonzero(rng, lo=-4, hi=4, den=3):
    while True:
        x = _rand_fraction(rng, lo, hi, den)
        if x != 0:
            return x


def _flat_handle(rng):
    """A commuting det-1 pair: simultaneous conjugates of diagonals."""
    while True:
        s, t = rng.randint(-3, 3), rng.randint(-3, 3)
        tmat = [[Fraction(1 + s * t), Fraction(s)], [Fraction(t), Fraction(1)]]
        d = _rand_nonzero(rng, -3, 3, 2)
        e = _rand_nonzero(rng, -3, 3, 2)
        amat = mat_chain(tmat, [[d, Fraction(0)], [Fraction(0), 1 / d]],
                         det1_inverse(tmat))
        bmat = mat_chain(tmat, [[e, Fraction(0)], [Fraction(0), 1 / e]],
                         det1_inverse(tmat))
        if amat[0][0] != 0 and bmat[0][0] != 0:
            return {"a": amat, "b": bmat}


def _generic_handle(rng):
    while True:
        a11 = _rand_nonzero(rng)
        b11 = _rand_nonzero(rng)
        a12, a21 = _rand_fraction(rng), _rand_fraction(rng)
        b12, b21 = _rand_fraction(rng), _rand_fraction(rng)
        amat = [[a11, a12], [a21, (1 + a12 * a21) / a11]]
        bmat = [[b11, b12], [b21, (1 + b12 * b21) / b11]]
        if handle_loop(amat, bmat)[0][0] != 0:
            return {"a": amat, "b": bmat}


def sample_holonomies(g: int, seed: int, flat: bool = False):
    """Deterministic det-1 holonomy sample; flat points are built from
    per-handle commuting pairs."""
    rng = random.Random(seed)
    make = _flat_handle if flat else _generic_handle
    return [make(rng) for _ in range(g)]


def handle_loop(amat, bmat):
    """B A^-1 B^-1 A for one handle."""
    return mat_chain(bmat, det1_inverse(amat), det1_inverse(bmat), amat)


def loop_product(handles):
    """The grand loop, handle g leftmost."""
    acc = identity(2, Fraction(1), Fraction(0))
    for h in reversed(handles):
        acc = mat_mul(acc, handle_loop(h["a"], h["b"]))
    return acc


def flatness_residual(handles) -> Fraction:
    m = loop_product(handles)
    ident = identity(2, Fraction(1), Fraction(0))
    return max(abs(m[i][j] - ident[i][j]) for i in range(2) for j in range(2))


# Rational factorization of the loop tails.  The triangular factors of a
# det-1 matrix G with G[0][0] != 0 involve square roots of G[0][0], but
# the combinations that enter the loop tails and the conjugations only
# use h^2, so everything stays rational:
#   P = [[g11, g12], [0, 1]],  N = [[g11, 0], [g21, 1]],
#   N P / g11 = G, and the tail product is
#   M_i = (prod 1/g_k11) N_g ... N_i P_i ... P_g.


def _np_factors(handles):
    ps, ns, g11s = [], [], []
    for h in handles:
        g = handle_loop(h["a"], h["b"])
        g11 = g[0][0]
        if g11 == 0:
            raise ZeroDivisionError("triangular factorization needs g11 != 0")
        ps.append([[g11, g[0][1]], [Fraction(0), Fraction(1)]])
        ns.append([[g11, Fraction(0)], [g[1][0], Fraction(1)]])
        g11s.append(g11)
    return ps, ns, g11s


def tail_loops_factored(handles):
    """M_i for i = 1..g via the rational triangular route."""
    ps, ns, g11s = _np_factors(handles)
    g = len(handles)
    out = []
    for i in range(g):
        acc_n = identity(2, Fraction(1), Fraction(0))
        for k in range(g - 1, i - 1, -1):
            acc_n = mat_mul(acc_n, ns[k])
        acc_p = identity(2, Fraction(1), Fraction(0))
        for k in range(i, g):
            acc_p = mat_mul(acc_p, ps[k])
        scale = Fraction(1)
        for k in range(i, g):
            scale /= g11s[k]
        out.append(mat_scale(scale, mat_mul(acc_n, acc_p)))
    return out


def global_holonomies(handles):
    """Conjugated holonomies: handle i is dressed by the upper factors of
    all higher handles.  The half-power prefactors cancel, so the
    conjugator is the plain product P_(i+1) ... P_g."""
    ps, _, _ = _np_factors(handles)
    g = len(handles)
    out = []
    for i in range(g):
        conj = identity(2, Fraction(1), Fraction(0))
        for k in range(i + 1, g):
            conj = mat_mul(conj, ps[k])
        det = classical_det(conj)
        conj_inv = mat_scale(1 / det, det1_inverse(conj))
        out.append({
            "a": mat_chain(conj_inv, handles[i]["a"], conj),
            "b": mat_chain(conj_inv, handles[i]["b"], conj),
        })
    return out


def tail_loops_global(handles):
    """M_i recomputed from the dressed holonomies, handle g leftmost."""
    glob = global_holonomies(handles)
    g = len(handles)
    out = []
    for i in range(g):
        acc = identity(2, Fraction(1), Fraction(0))
        for k in range(g - 1, i - 1, -1):
            acc = mat_mul(acc, handle_loop(glob[k]["a"], glob[k]["b"]))
        out.append(acc)
    return out


def tail_loop_components(handles):
    """Closed-form tail entries: products and partial sums of the
    per-handle loop entries.  Returns (m11, m12, m21) for each i."""
    gs = [handle_loop(h["a"], h["b"]) for h in handles]
    g = len(handles)
    out = []
    for i in range(g):
        m11 = Fraction(1)
        for k in range(i, g):
            m11 *= gs[k][0][0]
        m12 = Fraction(0)
        m21 = Fraction(0)
        for k in range(i, g):
            pref = Fraction(1)
            for t in range(i, k):
                pref *= gs[t][0][0]
            m12 += pref * gs[k][0][1]
            m21 += pref * gs[k][1][0]
        out.append((m11, m12, m21))
    return out


def verify_factorization(handles) -> list[dict]:
    """Cross-check the three computations of every loop tail."""
    rows = []
    fac = tail_loops_factored(handles)
    glo = tail_loops_global(handles)
    comp = tail_loop_components(handles)
    for i, (mf, mg, (c11, c12, c21)) in enumerate(zip(fac, glo, comp), start=1):
        rows.append({"name": f"tail_{i}_factored_vs_global",
                     "ok": mat_eq(mf, mg)})
        rows.append({"name": f"tail_{i}_component_entries",
                     "ok": mf[0][0] == c11 and mf[0][1] == c12 and mf[1][0] == c21})
        rows.append({"name": f"tail_{i}_det_one",
                     "ok": classical_det(mf) == 1})
    return rows


def loop_centralizer_residuals(handles) -> list[Fraction]:
    """Largest entries of [A_i, M] and [B_i, M]: all zero is the
    necessary condition for a character to extend to an invariant
    sesquilinear pairing."""
    m = loop_product(handles)
    out = []
    for h in handles:
        for key in ("a", "b"):
            d = mat_sub(mat_mul(h[key], m), mat_mul(m, h[key]))
            out.append(max(abs(d[i][j]) for i in range(2) for j in range(2)))
    return out
