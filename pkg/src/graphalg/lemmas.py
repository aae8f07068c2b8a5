"""Power identities for q-commuting pairs, and their root-of-unity limits.

Three families, each verified directly in the straightening engine:

  * the reordering formula expanding Z^m W^n in terms of W^j Z^i when
    Z W = q^2 W Z + c with central c;
  * additivity of p-th powers, (a+b)^p = a^p + b^p, when a b = q^2 b a
    and q^p = 1;
  * the twisted product rule (Z W - c)^p = Z^p W^p - c^p when
    Z W - c = q^-2 (W Z - c).

The verify_* helpers return small dicts ready for a JSON report.
"""

from __future__ import annotations

from .ncpoly import HandleAlgebra, NcPoly
from .scalars import FormalScalar, q_int


def q_rising(n: int, k: int) -> FormalScalar:
    """(n)_q! / (n-k)_q!, as a polynomial: product of (j)_q for the top k."""
    out = FormalScalar.one()
    for j in range(n - k + 1, n + 1):
        out = out * q_int(j)
    return out


def q_binomial(m: int, k: int) -> FormalScalar:
    """Gaussian binomial in base q^2, by the Pascal recursion."""
    if k < 0 or k > m:
        return FormalScalar.zero()
    row = [FormalScalar.one()]
    for i in range(1, m + 1):
        nxt = [FormalScalar.one()]
        for j in range(1, i):
            nxt.append(row[j - 1] + FormalScalar.q_power(2 * j) * row[j])
        nxt.append(FormalScalar.one())
        row = nxt
    return row[k]


def reorder_power_product(alg: HandleAlgebra, m: int, n: int) -> NcPoly:
    """The reordered expansion of X1^m X2^n, for m <= n.

    Sum over k of q^(2(m-k)(n-k)) c^k X2^(n-k) X1^(m-k) times the
    q-multinomial weight, with c = q^2 - 1 from X1 X2 = q^2 X2 X1 + c.
    """
    z, w = alg.gen("X1"), alg.gen("X2")
    c = FormalScalar.q_power(2) - FormalScalar.one()
    total = alg.zero()
    for k in range(0, m + 1):
        coeff = (FormalScalar.q_power(2 * (m - k) * (n - k))
                 * c ** k * q_rising(n, k) * q_binomial(m, k))
        total = total + coeff * (w ** (n - k) * z ** (m - k))
    return total


def reorder_residual(alg: HandleAlgebra, m: int, n: int) -> NcPoly:
    z, w = alg.gen("X1"), alg.gen("X2")
    return z ** m * w ** n - reorder_power_product(alg, m, n)


def frobenius_additivity_residual(x: NcPoly, y: NcPoly, p: int) -> NcPoly:
    """(x+y)^p - x^p - y^p."""
    return (x + y) ** p - x ** p - y ** p


def twisted_power_residual(z: NcPoly, w: NcPoly, c, p: int) -> NcPoly:
    """(z w - c)^p - (z^p w^p - c^p), with central c."""
    cp = NcPoly.one(z.pres) * c
    return (z * w - cp) ** p - (z ** p * w ** p - cp ** p)


def verify_reordering(max_m: int = 4, max_n: int = 4) -> list[dict]:
    alg = HandleAlgebra("formal")
    out = []
    for m in range(0, max_m + 1):
        for n in range(m, max_n + 1):
            r = reorder_residual(alg, m, n)
            out.append({"name": f"reorder_m{m}_n{n}", "ok": r.is_zero(),
                        "residual_terms": len(r.terms)})
    return out


def _additivity_instances(alg: HandleAlgebra):
    a, b = alg.gen("a11"), alg.gen("b11")
    x1, x2, x3, x4 = (alg.gen(n) for n in ("X1", "X2", "X3", "X4"))
    return [
        ("a11sq_plus_b11", a * a, b),
        ("minus_a11sq_plus_b11", -(a * a), b),
        ("X3_plus_X1", x3, x1),
        ("X4_plus_X2", x4, x2),
    ]


def verify_frobenius_additivity(p: int) -> list[dict]:
    alg = HandleAlgebra("root", p=p)
    out = []
    for name, x, y in _additivity_instances(alg):
        # hypothesis guard: x y = q^2 y x (up to the sign carried by x)
        hyp = x * y - FormalScalar.q_power(2) * (y * x)
        r = frobenius_additivity_residual(x, y, p)
        out.append({"name": f"additivity_{name}_p{p}",
                    "ok": hyp.is_zero() and r.is_zero(),
                    "residual_terms": len(r.terms)})
    return out


def verify_twisted_powers(p: int) -> list[dict]:
    alg = HandleAlgebra("root", p=p)
    x1, x2, x3, x4 = (alg.gen(n) for n in ("X1", "X2", "X3", "X4"))
    out = []
    for name, z, w in (("X2_X1", x2, x1), ("X3_X2", x3, x2), ("X4_X3", x4, x3)):
        # hypothesis guard: z w + 1 = q^-2 (w z + 1)
        hyp = (z * w + 1) - FormalScalar.q_power(-2) * (w * z + 1)
        r = twisted_power_residual(z, w, -1, p)
        out.append({"name": f"twisted_{name}_p{p}",
                    "ok": hyp.is_zero() and r.is_zero(),
                    "residual_terms": len(r.terms)})
    # the mirrored orientation, used for the loop-entry power formulas
    r = (1 + x1 * x2) ** p - (1 + x1 ** p * x2 ** p)
    out.append({"name": f"twisted_one_plus_X1X2_p{p}", "ok": r.is_zero(),
                "residual_terms": len(r.terms)})
    return out
