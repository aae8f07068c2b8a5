"""Compiling exchange relations from the braiding sandwiches.

Every pair of handle matrices (U, V) satisfies one of three matrix
identities on the tensor square, with U in the first leg and V in the
second:

    reflection:  U1 R+ V2 R+^-1 = R- V2 R-^-1 U1
    mixed:       U1 R+ V2 R+^-1 = R+ V2 R-^-1 U1
    commute:     U1 R+ V2 R+^-1 = R+ V2 R+^-1 U1

Expanding the 16 components of lhs - rhs gives quadratic relations between
the eight abstract entries u11..u22, v11..v22 with Laurent coefficients.
The hand tabulated component forms of the same identities are transcribed
here verbatim as well, so the two routes can be compared as subspaces of
the degree-two free span, and so discrepancies in the printed tables can
be pinpointed mechanically.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .linalg import rref, span_equal
from .matutil import mat_chain
from .rmatrix import r_minus, r_minus_inv, r_plus, r_plus_inv
from .scalars import FormalScalar, RationalExpr

Word = tuple[int, ...]

U_NAMES = ("u11", "u12", "u21", "u22")
V_NAMES = ("v11", "v12", "v21", "v22")
ALL_NAMES = U_NAMES + V_NAMES
LETTER = {n: i for i, n in enumerate(ALL_NAMES)}

KINDS = ("reflection", "mixed", "commute")


class FreePoly:
    """Element of the free associative algebra on the eight abstract entries."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict[Word, FormalScalar]] = None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    self.terms[w] = c

    @staticmethod
    def zero() -> "FreePoly":
        return FreePoly()

    @staticmethod
    def letter(i: int) -> "FreePoly":
        return FreePoly({(i,): FormalScalar.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FreePoly") -> "FreePoly":
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(w, None)
            else:
                t[w] = s
        out = FreePoly()
        out.terms = t
        return out

    def __neg__(self) -> "FreePoly":
        out = FreePoly()
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            out: dict[Word, FormalScalar] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    s = out.get(w)
                    s = c if s is None else s + c
                    if s.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = s
            return FreePoly(out)
        if isinstance(other, FormalScalar):
            return FreePoly({w: c * other for w, c in self.terms.items()})
        if isinstance(other, int):
            return FreePoly({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        # coefficients are central
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            word = "*".join(ALL_NAMES[i] for i in w) if w else "1"
            bits.append(f"({self.terms[w]!r})*{word}")
        return " + ".join(bits)


def _embed_first(base: int):
    """U (x) 1 on the tensor square, entries as FreePoly letters."""
    z = FreePoly.zero()
    m = [[z] * 4 for _ in range(4)]
    for i1 in range(2):
        for j1 in range(2):
            u = FreePoly.letter(base + 2 * i1 + j1)
            for i2 in range(2):
                m[2 * i1 + i2][2 * j1 + i2] = u
    return m


def _embed_second(base: int):
    """1 (x) V on the tensor square."""
    z = FreePoly.zero()
    m = [[z] * 4 for _ in range(4)]
    for i2 in range(2):
        for j2 in range(2):
            v = FreePoly.letter(base + 2 * i2 + j2)
            for i1 in range(2):
                m[2 * i1 + i2][2 * i1 + j2] = v
    return m


def compile_template(kind: str, same_matrix: bool = False) -> list[FreePoly]:
    """The 16 component residuals (lhs - rhs) of one sandwich identity.

    Letters 0..3 are the first-leg matrix entries, 4..7 the second-leg ones;
    with ``same_matrix`` both legs use letters 0..3.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown template kind {kind!r}")
    u1 = _embed_first(0)
    v2 = _embed_second(0 if same_matrix else 4)
    rp, rpi = r_plus(), r_plus_inv()
    rm, rmi = r_minus(), r_minus_inv()
    lhs = mat_chain(u1, rp, v2, rpi)
    if kind == "reflection":
        rhs = mat_chain(rm, v2, rmi, u1)
    elif kind == "mixed":
        rhs = mat_chain(rp, v2, rmi, u1)
    else:
        rhs = mat_chain(rp, v2, rpi, u1)
    return [lhs[i][j] - rhs[i][j] for i in range(4) for j in range(4)]


def instantiate(poly: FreePoly, images, one):
    """Substitute images[i] for letter i; images and ``one`` live in any
    algebra whose elements multiply with FormalScalar coefficients."""
    acc = one * FormalScalar.zero()
    for w, c in poly.terms.items():
        term = one * c
        for i in w:
            term = term * images[i]
        acc = acc + term
    return acc


def quantum_det_residual(base: int = 0) -> FreePoly:
    """u11 u22 - q^2 u21 u12 - 1."""
    q2 = FormalScalar.q_power(2)
    return FreePoly({
        (base, base + 3): FormalScalar.one(),
        (base + 2, base + 1): -q2,
        (): -FormalScalar.one(),
    })


# ---------------------------------------------------------------------------
# verbatim transcription of the hand-tabulated component relations
# ---------------------------------------------------------------------------


def _term(coeff, *names) -> FreePoly:
    c = coeff if isinstance(coeff, FormalScalar) else FormalScalar.rational(coeff)
    return FreePoly({tuple(LETTER[n] for n in names): c})


def _rel(lhs: Iterable[FreePoly], rhs: Iterable[FreePoly]) -> FreePoly:
    acc = FreePoly.zero()
    for t in lhs:
        acc = acc + t
    for t in rhs:
        acc = acc - t
    return acc


def _q(k: int) -> FormalScalar:
    return FormalScalar.q_power(k)


def _qh(k: int) -> FormalScalar:
    """q^(k/2) as a v-monomial (for the half-power lines)."""
    return FormalScalar.v_power(k)


_W = _q(1) - _q(-1)   # q - q^-1


def _one_minus_qm2() -> FormalScalar:
    return FormalScalar.one() - _q(-2)


def tabulated_same_handle() -> list[FreePoly]:
    """The printed component relations for one handle matrix with itself
    (letters u11..u22)."""
    e = _one_minus_qm2()
    return [
        _rel([_term(1, "u11", "u12")], [_term(_q(-2), "u12", "u11")]),
        _rel([_term(1, "u11", "u21")], [_term(_q(2), "u21", "u11")]),
        _rel([_term(1, "u11", "u22")], [_term(1, "u22", "u11")]),
        # [u12, u21] = -(1 - q^-2) u11 (u11 - u22)
        _rel([_term(1, "u12", "u21"), _term(-1, "u21", "u12")],
             [_term(-e, "u11", "u11"), _term(e, "u11", "u22")]),
        # [u12, u22] = -(1 - q^-2) u11 u12
        _rel([_term(1, "u12", "u22"), _term(-1, "u22", "u12")],
             [_term(-e, "u11", "u12")]),
        # [u21, u22] = (1 - q^-2) u21 u11
        _rel([_term(1, "u21", "u22"), _term(-1, "u22", "u21")],
             [_term(e, "u21", "u11")]),
    ]


def tabulated_mixed_handle() -> list[FreePoly]:
    """The printed component relations of the mixed same-handle pair;
    u = first handle matrix entries (a), v = second (b)."""
    w = _W
    w2 = w * w
    return [
        _rel([_term(1, "u11", "v11")], [_term(_q(1), "v11", "u11")]),
        _rel([_term(1, "u11", "v12")], [_term(_q(-1), "v12", "u11")]),
        _rel([_term(1, "u11", "v21")],
             [_term(_q(1), "v21", "u11"), _term(w, "v11", "u21")]),
        _rel([_term(1, "u11", "v22")],
             [_term(_q(-1), "v22", "u11"), _term(_q(-1) * w2, "v11", "u11"),
              _term(w, "v12", "u21")]),
        _rel([_term(1, "u12", "v11")],
             [_term(_q(1), "v11", "u12"), _term(w, "v12", "u11")]),
        _rel([_term(1, "u12", "v12")], [_term(_q(1), "v12", "u12")]),
        _rel([_term(1, "u12", "v21")],
             [_term(_q(-1), "v21", "u12"), _term(_q(-1) * w2, "v12", "u21"),
              _term(_q(-2) * w, "v22", "u11"), _term(_q(-2) * w, "v11", "u22"),
              _term(_q(-2) * w * (_q(-2) - 2), "v11", "u11")]),
        _rel([_term(1, "u12", "v22")],
             [_term(_q(-1), "v22", "u12"), _term(_q(-1) * w2, "v11", "u12"),
              _term(w, "v12", "u22"), _term(-_q(-2) * w, "v12", "u11")]),
        _rel([_term(1, "u21", "v11")], [_term(_q(-1), "v11", "u21")]),
        _rel([_term(1, "u21", "v12")],
             [_term(_q(-1), "v12", "u21"), _term(_q(-2) * w, "v11", "u11")]),
        _rel([_term(1, "u21", "v21")], [_term(_q(1), "v21", "u21")]),
        _rel([_term(1, "u21", "v22")],
             [_term(_q(1), "v22", "u21"), _term(w, "v21", "u11")]),
        _rel([_term(1, "u22", "v11")],
             [_term(_q(-1), "v11", "u22"), _term(_q(-1) * w2, "v11", "u11"),
              _term(w, "v12", "u21")]),
        _rel([_term(1, "u22", "v22")],
             [_term(_q(1), "v22", "u22"), _term(-_q(-3) * w2, "v11", "u11"),
              _term(w, "v21", "u12"), _term(-_q(-2) * w, "v12", "u21")]),
        _rel([_term(1, "u22", "v21")],
             [_term(_q(-1), "v21", "u22"), _term(_q(-1) * w2, "v21", "u11"),
              _term(w, "v22", "u21"), _term(-_q(-2) * w, "v11", "u21")]),
        _rel([_term(1, "u22", "v12")],
             [_term(_q(1), "v12", "u22"), _term(w, "v11", "u12")]),
    ]


def tabulated_cross_handle() -> list[FreePoly]:
    """The printed component relations of the commuting-type pair;
    u = first matrix (c), v = second (d)."""
    w = _W
    return [
        _rel([_term(1, "u11", "v11")],
             [_term(1, "v11", "u11"), _term(-_q(1) * w, "v12", "u21")]),
        _rel([_term(1, "u11", "v21")],
             [_term(1, "v21", "u11"), _term(_q(1) * w, "v11", "u21"),
              _term(-_q(1) * w, "v22", "u21")]),
        _rel([_term(1, "u11", "v12")], [_term(1, "v12", "u11")]),
        _rel([_term(1, "u11", "v22")],
             [_term(1, "v22", "u11"), _term(_q(-1) * w, "v12", "u21")]),
        _rel([_term(1, "u12", "v11")],
             [_term(1, "v11", "u12"), _term(_q(1) * w, "v12", "u11"),
              _term(-_q(1) * w, "v12", "u22")]),
        _rel([_term(1, "u12", "v12")], [_term(_q(2), "v12", "u12")]),
        # the one line printed in implicit form
        _rel([_term(1, "u12", "v21"), _term(_q(-1) * w, "u11", "v11"),
              _term(-_q(-1) * w, "u11", "v22")],
             [_term(_q(-2), "v21", "u12"), _term(_q(-1) * w, "v11", "u22"),
              _term(-_q(-1) * w, "v22", "u22")]),
        _rel([_term(1, "u12", "v22")],
             [_term(1, "v22", "u12"), _term(-_q(-1) * w, "v12", "u11"),
              _term(_q(-1) * w, "v12", "u22")]),
        _rel([_term(1, "u21", "v11")], [_term(1, "v11", "u21")]),
        _rel([_term(1, "u21", "v12")], [_term(_q(-2), "v12", "u21")]),
        _rel([_term(1, "u21", "v21")], [_term(_q(2), "v21", "u21")]),
        _rel([_term(1, "u21", "v22")], [_term(1, "v22", "u21")]),
        _rel([_term(1, "u22", "v11")],
             [_term(1, "v11", "u22"), _term(_q(-1) * w, "v12", "u21")]),
        _rel([_term(1, "u22", "v22")],
             [_term(1, "v22", "u22"), _term(-_q(-3) * w, "v12", "u21")]),
        _rel([_term(1, "u22", "v12")], [_term(1, "v12", "u22")]),
        _rel([_term(1, "u22", "v21")],
             [_term(1, "v21", "u22"), _term(-_q(-1) * w, "v11", "u21"),
              _term(_q(-1) * w, "v22", "u21")]),
    ]


def tabulated_monodromy_handle() -> list[FreePoly]:
    """The printed component relations between a monodromy (u = m entries,
    first leg) and a handle matrix (v = a entries, second leg)."""
    w = _W
    w2 = w * w
    return [
        _rel([_term(1, "v11", "u11")], [_term(1, "u11", "v11")]),
        _rel([_term(1, "v11", "u12")],
             [_term(1, "u12", "v11"), _term(-_q(1) * w, "u11", "v12")]),
        _rel([_term(1, "v11", "u21")],
             [_term(1, "u21", "v11"), _term(_q(-1) * w, "u11", "v21")]),
        _rel([_term(1, "v11", "u22")],
             [_term(1, "u22", "v11"), _term(_q(1) * w, "u12", "v21"),
              _term(-_q(1) * w, "u21", "v12"), _term(-w2, "u11", "v22"),
              _term(w2, "u11", "v11")]),
        _rel([_term(1, "v12", "u11")], [_term(_q(2), "u11", "v12")]),
        _rel([_term(1, "v12", "u12")], [_term(1, "u12", "v12")]),
        _rel([_term(1, "v12", "u21")],
             [_term(1, "u21", "v12"), _term(-_q(-1) * w, "u11", "v11"),
              _term(_q(-1) * w, "u11", "v22")]),
        _rel([_term(1, "v12", "u22")],
             [_term(_q(-2), "u22", "v12"), _term(-_q(-1) * w, "u12", "v11"),
              _term(_q(-1) * w, "u12", "v22"),
              _term(_q(-1) * w * (_q(2) - _q(-2)), "u11", "v12")]),
        _rel([_term(1, "v21", "u11")], [_term(_q(-2), "u11", "v21")]),
        _rel([_term(1, "v21", "u12")],
             [_term(1, "u12", "v21"), _term(_q(-1) * w, "u11", "v11"),
              _term(-_q(-1) * w, "u11", "v22")]),
        _rel([_term(1, "v21", "u21")], [_term(1, "u21", "v21")]),
        _rel([_term(1, "v21", "u22")],
             [_term(_q(2), "u22", "v21"), _term(_q(1) * w, "u21", "v11"),
              _term(-_q(1) * w, "u21", "v22")]),
        _rel([_term(1, "v22", "u11")], [_term(1, "u11", "v22")]),
        _rel([_term(1, "v22", "u12")],
             [_term(1, "u12", "v22"), _term(_q(-1) * w, "u11", "v12")]),
        _rel([_term(1, "v22", "u21")],
             [_term(1, "u21", "v22"), _term(-_q(-3) * w, "u11", "v21")]),
        _rel([_term(1, "v22", "u22")],
             [_term(1, "u22", "v22"), _term(-_q(-1) * w, "u12", "v21"),
              _term(_q(-1) * w, "u21", "v12"), _term(_q(-2) * w2, "u11", "v22"),
              _term(-_q(-2) * w2, "u11", "v11")]),
    ]


# ---------------------------------------------------------------------------
# half-power exchange lines (tokens resolved by the caller)
# ---------------------------------------------------------------------------

# Tokens: entries of the two matrices by name, plus "Q" for the square root
# of v11 (second-leg diagonal entry), "Qi" for its inverse.

def half_power_cross_lines():
    """For a commuting-type pair (u = c, v = d) with Q^2 = v11:
    residuals as lists of (coeff, token word); each must vanish."""
    one_minus_v2 = FormalScalar.one() - _qh(2)   # 1 - q
    line1 = [
        (FormalScalar.one(), ("u11", "Q")),
        (-FormalScalar.one(), ("Q", "u11")),
        (-one_minus_v2, ("Qi", "v12", "u21")),
    ]
    c = _qh(-6) * one_minus_v2 * one_minus_v2    # q^-3 (1-q)^2
    line2 = [
        (FormalScalar.one(), ("u12", "Q")),
        (-FormalScalar.one(), ("Q", "u12")),
        (one_minus_v2, ("Qi", "v12", "u11")),
        (-one_minus_v2, ("Qi", "v12", "u22")),
        (-c, ("Qi", "Qi", "Qi", "v12", "v12", "u21")),
    ]
    return [line1, line2]


def half_power_monodromy_lines():
    """For a reflection-type pair (u = m, v = a) with Q^2 = v11:
    residuals as lists of (coeff, token word)."""
    one_minus_v2 = FormalScalar.one() - _qh(2)    # 1 - q
    one_minus_vm2 = FormalScalar.one() - _qh(-2)  # 1 - q^-1
    line1 = [
        (FormalScalar.one(), ("Q", "u12")),
        (-FormalScalar.one(), ("u12", "Q")),
        (-one_minus_v2, ("u11", "Qi", "v12")),
    ]
    line2 = [
        (FormalScalar.one(), ("Q", "u21")),
        (-FormalScalar.one(), ("u21", "Q")),
        (-one_minus_vm2, ("u11", "Qi", "v21")),
    ]
    return [line1, line2]


# ---------------------------------------------------------------------------
# genus catalog and span comparison
# ---------------------------------------------------------------------------


def relation_catalog(genus: int) -> list[dict]:
    """Every sandwich identity of the genus-g algebra, as template instances.

    Each item: {"name", "kind", "left": (sym, i), "right": (sym, j)}.
    """
    cat = []
    for i in range(1, genus + 1):
        cat.append({"name": f"A{i}-A{i}", "kind": "reflection", "left": ("A", i), "right": ("A", i)})
        cat.append({"name": f"B{i}-B{i}", "kind": "reflection", "left": ("B", i), "right": ("B", i)})
        cat.append({"name": f"A{i}-B{i}", "kind": "mixed", "left": ("A", i), "right": ("B", i)})
    for i in range(1, genus + 1):
        for j in range(i + 1, genus + 1):
            for l, r in (("A", "A"), ("A", "B"), ("B", "A"), ("B", "B")):
                cat.append({"name": f"{l}{i}-{r}{j}", "kind": "commute",
                            "left": (l, i), "right": (r, j)})
            cat.append({"name": f"A{i}-M{j}", "kind": "commute", "left": ("A", i), "right": ("M", j)})
            cat.append({"name": f"B{i}-M{j}", "kind": "commute", "left": ("B", i), "right": ("M", j)})
    for i in range(1, genus + 1):
        for j in range(i, genus + 1):
            cat.append({"name": f"M{i}-M{j}", "kind": "reflection", "left": ("M", i), "right": ("M", j)})
            cat.append({"name": f"M{i}-A{j}", "kind": "reflection", "left": ("M", i), "right": ("A", j)})
            cat.append({"name": f"M{i}-B{j}", "kind": "reflection", "left": ("M", i), "right": ("B", j)})
    return cat


def _rows_for_span(polys: list[FreePoly], words: list[Word]) -> list[list[RationalExpr]]:
    col = {w: i for i, w in enumerate(words)}
    rows = []
    for fp in polys:
        row = [RationalExpr.from_scalar(0)] * len(words)
        for w, c in fp.terms.items():
            row[col[w]] = RationalExpr.from_scalar(c)
        rows.append(row)
    return rows


def compare_spans(compiled: list[FreePoly], tabulated: list[FreePoly]) -> dict:
    """Row-space comparison of the two relation sets in the free word basis.

    Returns a report with the verdict and, if the spans differ, which side
    has excess directions (dimensions only; the compiled set is the
    authoritative one either way).
    """
    words = sorted({w for fp in compiled + tabulated for w in fp.terms},
                   key=lambda t: (len(t), t))
    rows_c = _rows_for_span(compiled, words)
    rows_t = _rows_for_span(tabulated, words)
    red_c, piv_c = rref(rows_c)
    red_t, piv_t = rref(rows_t)
    joint, piv_joint = rref(rows_c + rows_t)
    report = {
        "compiled_rank": len(piv_c),
        "tabulated_rank": len(piv_t),
        "joint_rank": len(piv_joint),
        "equal": len(piv_c) == len(piv_t) == len(piv_joint),
        "tabulated_inside_compiled": len(piv_joint) == len(piv_c),
        "compiled_inside_tabulated": len(piv_joint) == len(piv_t),
    }
    return report
