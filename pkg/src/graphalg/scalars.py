"""Exact scalar arithmetic.

Three scalar domains, all exact:

* :class:`FormalScalar` -- Laurent polynomials in a formal variable ``v``
  with rational coefficients.  The deformation parameter is ``q = v**2``,
  so half-integer powers of ``q`` are honest monomials here.
* :class:`RootScalar` -- elements of the cyclotomic field Q(zeta_p) for an
  odd integer p >= 3, represented as residues modulo the p-th cyclotomic
  polynomial.  The formal variable specializes as ``v -> zeta**((p+1)//2)``,
  which makes ``q = v**2 = zeta`` a primitive p-th root of unity.
* :class:`RationalExpr` -- quotients of two FormalScalars, used for the
  deformation-limit computations where a vanishing denominator has to be
  cancelled exactly before evaluating at a root of unity.

No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Rat = Union[int, Fraction]

# ---------------------------------------------------------------------------
# dense rational polynomial helpers (coefficient lists, index = degree)
# ---------------------------------------------------------------------------


def _poly_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] * inv_lead
        if f:
            q[k] = f
            for j, bj in enumerate(b):
                a[k + j] -= f * bj
        a.pop()
        _poly_trim(a)
        if not a:
            break
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _int_poly_divmod_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of integer polynomials (used for cyclotomic polys)."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    q, r = _poly_divmod(fa, fb)
    if r:
        raise ArithmeticError("inexact division while building cyclotomic polynomial")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("non-integer quotient in cyclotomic construction")
        out.append(c.numerator)
    return out


_cyclo_cache: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    hit = _cyclo_cache.get(n)
    if hit is None:
        # (x^n - 1) / prod_{d | n, d < n} Phi_d
        num = [-1] + [0] * (n - 1) + [1]
        for d in range(1, n):
            if n % d == 0:
                num = _int_poly_divmod_exact(num, cyclotomic_polynomial(d))
        hit = tuple(num)
        _cyclo_cache[n] = hit
    return list(hit)


# ---------------------------------------------------------------------------
# FormalScalar
# ---------------------------------------------------------------------------


class FormalScalar:
    """A Laurent polynomial in v over Q.  Immutable by convention.

    The coefficient dict maps exponent -> nonzero Fraction.  ``q`` is v**2,
    so e.g. ``q**(1/2)`` is representable as the exponent-1 monomial.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Optional[Mapping[int, Rat]] = None):
        c: dict[int, Fraction] = {}
        if coeffs:
            for e, x in coeffs.items():
                f = Fraction(x)
                if f:
                    c[int(e)] = f
        self.c = c

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "FormalScalar":
        return FormalScalar()

    @staticmethod
    def one() -> "FormalScalar":
        return FormalScalar({0: 1})

    @staticmethod
    def rational(x: Rat) -> "FormalScalar":
        return FormalScalar({0: Fraction(x)})

    @staticmethod
    def v_power(k: int, coeff: Rat = 1) -> "FormalScalar":
        return FormalScalar({k: Fraction(coeff)})

    @staticmethod
    def q_power(k: int, coeff: Rat = 1) -> "FormalScalar":
        """coeff * q**k  ==  coeff * v**(2k)."""
        return FormalScalar({2 * k: Fraction(coeff)})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == {0: Fraction(1)}

    def as_rational(self) -> Optional[Fraction]:
        if not self.c:
            return Fraction(0)
        if len(self.c) == 1 and 0 in self.c:
            return self.c[0]
        return None

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "FormalScalar":
        if isinstance(other, FormalScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return FormalScalar.rational(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "FormalScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        c = dict(self.c)
        for e, x in o.c.items():
            s = c.get(e, Fraction(0)) + x
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        r = FormalScalar()
        r.c = c
        return r

    __radd__ = __add__

    def __neg__(self) -> "FormalScalar":
        r = FormalScalar()
        r.c = {e: -x for e, x in self.c.items()}
        return r

    def __sub__(self, other) -> "FormalScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "FormalScalar":
        return (-self) + other

    def __mul__(self, other) -> "FormalScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, x1 in self.c.items():
            for e2, x2 in o.c.items():
                e = e1 + e2
                s = c.get(e, Fraction(0)) + x1 * x2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        r = FormalScalar()
        r.c = c
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FormalScalar":
        if n < 0:
            inv = self.monomial_inverse()
            if inv is None:
                raise ArithmeticError("negative power of a non-monomial FormalScalar")
            return inv ** (-n)
        out = FormalScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monomial_inverse(self) -> Optional["FormalScalar"]:
        if len(self.c) != 1:
            return None
        (e, x), = self.c.items()
        return FormalScalar({-e: 1 / x})

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    # -- calculus / specialization -----------------------------------------

    def evaluate_at_one(self) -> Fraction:
        """Value at v = 1 (equivalently q = 1)."""
        return sum(self.c.values(), Fraction(0))

    def derivative_at_one(self) -> Fraction:
        """d/dq at q = 1, via d/dq = (1/(2v)) d/dv on v-monomials."""
        return sum((Fraction(e) * x for e, x in self.c.items()), Fraction(0)) / 2

    def specialize(self, p: int) -> "RootScalar":
        """Evaluate at the root of unity: v -> zeta_p**((p+1)//2)."""
        field = CyclotomicField.get(p)
        half = (p + 1) // 2
        out = field.zero()
        for e, x in self.c.items():
            out = out + field.zeta_power(e * half) * x
        return out

    def substitute_v_inverse(self) -> "FormalScalar":
        """The bar involution v -> v**-1 (hence q -> q**-1)."""
        return FormalScalar({-e: x for e, x in self.c.items()})

    # -- presentation -------------------------------------------------------

    def to_dense(self) -> tuple[int, list[Fraction]]:
        """(valuation, coefficients from valuation upward); ((0, []) if zero)."""
        if not self.c:
            return 0, []
        lo = min(self.c)
        hi = max(self.c)
        return lo, [self.c.get(e, Fraction(0)) for e in range(lo, hi + 1)]

    @staticmethod
    def from_dense(val: int, coeffs: Iterable[Rat]) -> "FormalScalar":
        return FormalScalar({val + i: Fraction(x) for i, x in enumerate(coeffs)})

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            x = self.c[e]
            if e == 0:
                parts.append(str(x))
            elif e == 1:
                parts.append(f"{x}*v" if x != 1 else "v")
            else:
                parts.append(f"{x}*v^{e}" if x != 1 else f"v^{e}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# cyclotomic field
# ---------------------------------------------------------------------------


class CyclotomicField:
    """Flyweight for Q(zeta_p), p odd >= 3 (primality not required)."""

    _cache: dict[int, "CyclotomicField"] = {}

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0:
            raise ValueError(f"order must be odd and >= 3, got {p}")
        self.p = p
        self.modulus = [Fraction(x) for x in cyclotomic_polynomial(p)]
        self.degree = len(self.modulus) - 1
        # reduction table: zeta^k as residue vector, k = 0 .. 2*degree - 2
        d = self.degree
        table = []
        cur = [Fraction(0)] * d
        cur[0] = Fraction(1)
        for _ in range(2 * d - 1):
            table.append(tuple(cur))
            # multiply by x, reduce
            nxt = [Fraction(0)] + cur[: d - 1]
            lead = cur[d - 1]
            if lead:
                for i in range(d):
                    nxt[i] -= lead * self.modulus[i]
            cur = nxt
        self._xpow = table
        # zeta^k for k = 0 .. p-1
        z = RootScalar(self, self._reduce([Fraction(0), Fraction(1)]))
        zp = [self.one()]
        for _ in range(p - 1):
            zp.append(zp[-1] * z)
        self._zeta_pows = zp

    @classmethod
    def get(cls, p: int) -> "CyclotomicField":
        f = cls._cache.get(p)
        if f is None:
            f = cls(p)
            cls._cache[p] = f
        return f

    def _reduce(self, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        if len(coeffs) > 2 * d - 1:
            _, coeffs = _poly_divmod(list(coeffs), self.modulus)
        out = [Fraction(0)] * d
        for k, x in enumerate(coeffs):
            if not x:
                continue
            if k < d:
                out[k] += x
            else:
                row = self._xpow[k]
                for i in range(d):
                    if row[i]:
                        out[i] += x * row[i]
        return tuple(out)

    def zero(self) -> "RootScalar":
        return RootScalar(self, tuple([Fraction(0)] * self.degree))

    def one(self) -> "RootScalar":
        c = [Fraction(0)] * self.degree
        c[0] = Fraction(1)
        return RootScalar(self, tuple(c))

    def rational(self, x: Rat) -> "RootScalar":
        c = [Fraction(0)] * self.degree
        c[0] = Fraction(x)
        return RootScalar(self, tuple(c))

    def zeta(self) -> "RootScalar":
        return self.zeta_power(1)

    def zeta_power(self, k: int) -> "RootScalar":
        return self._zeta_pows[k % self.p]

    def q(self) -> "RootScalar":
        """Image of q: the primitive root zeta itself."""
        return self.zeta()

    def v(self) -> "RootScalar":
        """Image of v: zeta**((p+1)//2), a square root of q in the field."""
        return self.zeta_power((self.p + 1) // 2)

    def q_power(self, k: int) -> "RootScalar":
        return self.zeta_power(k)

    def v_power(self, k: int) -> "RootScalar":
        return self.zeta_power(k * ((self.p + 1) // 2))

    def from_vector(self, coeffs: Iterable[Rat]) -> "RootScalar":
        cs = [Fraction(x) for x in coeffs]
        if len(cs) > self.degree:
            return RootScalar(self, self._reduce(cs))
        cs += [Fraction(0)] * (self.degree - len(cs))
        return RootScalar(self, tuple(cs))

    def __repr__(self):
        return f"CyclotomicField(p={self.p})"


class RootScalar:
    """Element of Q(zeta_p): residue vector modulo the cyclotomic polynomial."""

    __slots__ = ("field", "c")

    def __init__(self, field: CyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.c = coeffs

    def _coerce(self, other) -> "RootScalar":
        if isinstance(other, RootScalar):
            if other.field is not self.field and other.field.p != self.field.p:
                raise ValueError("mixing cyclotomic fields of different order")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_one(self) -> bool:
        return self.c[0] == 1 and all(x == 0 for x in self.c[1:])

    def as_rational(self) -> Optional[Fraction]:
        if all(x == 0 for x in self.c[1:]):
            return self.c[0]
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RootScalar(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return RootScalar(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RootScalar(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return RootScalar(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "RootScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # extended euclid in Q[x]: find s with s * self == gcd (mod modulus)
        r0 = list(self.field.modulus)
        r1 = _poly_trim(list(self.c))
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            qs = _poly_mul(q, s1)
            n = max(len(s0), len(qs))
            nxt = _poly_trim([(s0[i] if i < len(s0) else Fraction(0))
                              - (qs[i] if i < len(qs) else Fraction(0)) for i in range(n)])
            r0, r1 = r1, r
            s0, s1 = s1, nxt
        # r0 = gcd, a nonzero constant (the modulus is irreducible over Q),
        # and s0 * self == r0 modulo the modulus
        if len(r0) != 1:
            raise ArithmeticError("element shares a factor with the modulus; field arithmetic bug")
        inv_const = 1 / r0[0]
        return RootScalar(self.field, self.field._reduce([x * inv_const for x in s0]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "RootScalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash((self.field.p, self.c))

    def __repr__(self) -> str:
        parts = []
        for e, x in enumerate(self.c):
            if x == 0:
                continue
            if e == 0:
                parts.append(str(x))
            else:
                head = "z" if e == 1 else f"z^{e}"
                parts.append(head if x == 1 else f"{x}*{head}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# ---------------------------------------------------------------------------
# RationalExpr
# ---------------------------------------------------------------------------


class RationalExpr:
    """num/den with FormalScalar parts, reduced by polynomial gcd.

    The denominator is normalized to a monic ordinary polynomial (valuation
    shifted into the numerator), which makes equality a plain tuple check.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: FormalScalar, den: Optional[FormalScalar] = None):
        if den is None:
            den = FormalScalar.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RationalExpr")
        if num.is_zero():
            self.num = FormalScalar.zero()
            self.den = FormalScalar.one()
            return
        nval, ncs = num.to_dense()
        dval, dcs = den.to_dense()
        g = _poly_gcd(ncs, dcs)
        if len(g) > 1:
            ncs, _ = _poly_divmod(ncs, g)
            dcs, _ = _poly_divmod(dcs, g)
        lead = dcs[-1]
        ncs = [x / lead for x in ncs]
        dcs = [x / lead for x in dcs]
        # shift all valuation into the numerator (den becomes an honest poly)
        self.num = FormalScalar.from_dense(nval - dval, ncs)
        self.den = FormalScalar.from_dense(0, dcs)

    @staticmethod
    def from_scalar(x: Union[FormalScalar, Rat]) -> "RationalExpr":
        if isinstance(x, FormalScalar):
            return RationalExpr(x)
        return RationalExpr(FormalScalar.rational(x))

    def _coerce(self, other) -> "RationalExpr":
        if isinstance(other, RationalExpr):
            return other
        if isinstance(other, (FormalScalar, int, Fraction)):
            return RationalExpr.from_scalar(other)
        return NotImplemented  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalExpr(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalExpr.from_scalar(0)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalExpr(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero RationalExpr")
        return RationalExpr(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.num * o.den) == (o.num * self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def limit_at_root(self, p: int) -> RootScalar:
        """Exact limit as v tends to the primitive p-th root zeta**((p+1)//2).

        Cancels the cyclotomic factor from numerator and denominator as many
        times as needed; raises if the limit does not exist (pole).
        """
        field = CyclotomicField.get(p)
        phi = [Fraction(x) for x in cyclotomic_polynomial(p)]
        nval, ncs = self.num.to_dense()
        dval, dcs = self.den.to_dense()
        if not ncs:
            return field.zero()

        def value_at_root(val: int, cs: list[Fraction]) -> RootScalar:
            half = (p + 1) // 2
            out = field.zero()
            for i, x in enumerate(cs):
                if x:
                    out = out + field.zeta_power((val + i) * half) * x
            return out

        while True:
            dv = value_at_root(dval, dcs)
            if not dv.is_zero():
                nv = value_at_root(nval, ncs)
                # the valuation shift v**(nval - dval) never vanishes at a root
                return nv * dv.inverse()
            ncs_q, ncs_r = _poly_divmod(ncs, phi)
            if ncs_r:
                raise ZeroDivisionError("pole at the root of unity; limit does not exist")
            dcs_q, dcs_r = _poly_divmod(dcs, phi)
            if dcs_r:
                raise ArithmeticError("denominator vanished but is not divisible; bug")
            ncs, dcs = ncs_q, dcs_q

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


# convenience: q-integers and q-factorials in the formal variable -----------


def q_int(n: int) -> FormalScalar:
    """(1 - q**(2n)) / (1 - q**2) expanded: 1 + q**2 + ... + q**(2(n-1))."""
    if n < 0:
        raise ValueError("q_int wants n >= 0")
    # q**(2k) is the v-exponent 4k
    return FormalScalar({4 * k: 1 for k in range(n)})


def q_factorial(n: int) -> FormalScalar:
    out = FormalScalar.one()
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out
