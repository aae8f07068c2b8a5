"""Noncommutative polynomial arithmetic with straightening normal forms.

A Presentation is a finite, totally ordered set of letters together with
rewrite rules indexed by *adjacent ordered pairs* of letters.  Every rule
rewrites a two-letter word into a polynomial whose words are either the
swapped (sorted) pair or strictly shorter, which makes repeated rewriting
terminate; memoized single-letter insertion keeps it fast.

Two coefficient modes:

* formal -- coefficients are FormalScalar Laurent polynomials in v (q = v^2);
* root   -- coefficients live in a commutative polynomial ring over Q(zeta_p)
  whose variables are central symbols (p-th powers of generators and the
  inverted quantum-trace symbol).  In this mode a run of p equal letters in
  a normal word folds into the matching central symbol, so normal words keep
  every exponent below p.

The canonical algebra here is the genus-1 handle algebra in its transversal
generators: invertible diagonal generators a11, b11 and four q-commuting
affine generators X1..X4, plus (in formal mode) a formally adjoined inverse
of the quantum trace entry M11.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Optional, Union

from .scalars import CyclotomicField, FormalScalar, RootScalar

Word = tuple[int, ...]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))


class EngineFuelError(RuntimeError):
    """Raised when a normalization runs past its step budget."""


# ---------------------------------------------------------------------------
# coefficient rings
# ---------------------------------------------------------------------------


class FormalRing:
    """Adapter making FormalScalar usable as an NcPoly coefficient ring."""

    kind = "formal"

    def one(self) -> FormalScalar:
        return FormalScalar.one()

    def lift_formal(self, f: FormalScalar) -> FormalScalar:
        return f

    def lift_rational(self, x) -> FormalScalar:
        return FormalScalar.rational(x)


class CentralRing:
    """Commutative polynomial ring over Q(zeta_p) in named central symbols.

    Symbols listed in ``laurent`` may carry negative exponents (they are
    invertible); all others must stay nonnegative.
    """

    kind = "root"

    def __init__(self, p: int, symbols: list[str], laurent: tuple[str, ...] = ()):
        self.p = p
        self.field = CyclotomicField.get(p)
        self.symbols = list(symbols)
        self.index = {s: i for i, s in enumerate(self.symbols)}
        self.laurent = frozenset(self.index[s] for s in laurent)
        self.nsym = len(self.symbols)

    def zero(self) -> "CentralPoly":
        return CentralPoly(self, {})

    def one(self) -> "CentralPoly":
        return self.constant(self.field.one())

    def constant(self, x: RootScalar) -> "CentralPoly":
        if x.is_zero():
            return CentralPoly(self, {})
        return CentralPoly(self, {(0,) * self.nsym: x})

    def lift_formal(self, f: FormalScalar) -> "CentralPoly":
        return self.constant(f.specialize(self.p))

    def lift_rational(self, x) -> "CentralPoly":
        return self.constant(self.field.rational(x))

    def monomial(self, exps: dict[str, int], coeff: Optional[RootScalar] = None) -> "CentralPoly":
        e = [0] * self.nsym
        for name, k in exps.items():
            i = self.index[name]
            if k < 0 and i not in self.laurent:
                raise ValueError(f"symbol {name} is not invertible")
            e[i] = k
        c = coeff if coeff is not None else self.field.one()
        if c.is_zero():
            return self.zero()
        return CentralPoly(self, {tuple(e): c})

    def symbol(self, name: str) -> "CentralPoly":
        return self.monomial({name: 1})

    def __repr__(self):
        return f"CentralRing(p={self.p}, symbols={self.symbols})"


class CentralPoly:
    """Element of a CentralRing: monomial-exponent dict with RootScalar coeffs."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: CentralRing, terms: dict[tuple[int, ...], RootScalar]):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "CentralPoly":
        if isinstance(other, CentralPoly):
            return other
        if isinstance(other, RootScalar):
            return self.ring.constant(other)
        if isinstance(other, (int, Fraction)):
            return self.ring.lift_rational(other)
        if isinstance(other, FormalScalar):
            return self.ring.lift_formal(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for m, c in o.terms.items():
            s = t.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(m, None)
            else:
                t[m] = s
        return CentralPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return CentralPoly(self.ring, {m: -c for m, c in self.terms.items()})

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
        out: dict[tuple[int, ...], RootScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return CentralPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CentralPoly":
        if n < 0:
            raise ValueError("negative powers of a CentralPoly are not defined")
        out = self.ring.one()
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
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    def as_constant(self) -> Optional[RootScalar]:
        if not self.terms:
            return self.ring.field.zero()
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if all(e == 0 for e in m):
                return c
        return None

    def max_degree(self, name: str) -> int:
        i = self.ring.index[name]
        return max((m[i] for m in self.terms), default=0)

    def substitute_symbol_power(self, name: str, value: "CentralPoly", clear_to: int = 0) -> "CentralPoly":
        """Replace sym^k by value^k (sym must occur with exponent >= clear_to)."""
        i = self.ring.index[name]
        out = self.ring.zero()
        for m, c in self.terms.items():
            k = m[i]
            if k < clear_to:
                raise ValueError(f"exponent of {name} below {clear_to}")
            base = CentralPoly(self.ring, {m[:i] + (0,) + m[i + 1:]: c})
            out = out + base * value ** k
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            factors = []
            for i, e in enumerate(m):
                if e:
                    s = self.ring.symbols[i]
                    factors.append(s if e == 1 else f"{s}^{e}")
            head = "*".join(factors) if factors else "1"
            parts.append(f"({self.terms[m]!r})*{head}")
        return " + ".join(parts)


Coeff = Union[FormalScalar, CentralPoly]


# ---------------------------------------------------------------------------
# presentation and normal forms
# ---------------------------------------------------------------------------


class Presentation:
    """Totally ordered letters plus adjacent-pair rewrite rules.

    ``pair_rules`` maps (left, right) letter pairs to replacement polynomials
    given as {word: FormalScalar}; coefficients are lifted into the ring once
    at construction.  ``folds`` (root mode) maps a letter to the name of the
    central symbol that absorbs runs of p copies of it.
    """

    def __init__(self, names: list[str], ring,
                 pair_rules: dict[tuple[int, int], dict[Word, FormalScalar]],
                 folds: Optional[dict[int, str]] = None,
                 fuel: int = 50_000_000):
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.ring = ring
        self.pair_rules: dict[tuple[int, int], dict[Word, Coeff]] = {
            pair: {w: ring.lift_formal(c) for w, c in rhs.items()}
            for pair, rhs in pair_rules.items()
        }
        self.folds = dict(folds) if folds else {}
        self.fold_p = getattr(ring, "p", None)
        if self.folds and self.fold_p is None:
            raise ValueError("folds need a root-mode ring")
        self._cache: dict[tuple[Word, int], dict[Word, Coeff]] = {}
        self.fuel = fuel
        self.steps = 0

    # -- core -------------------------------------------------------------

    def _emit(self, w: Word) -> dict[Word, Coeff]:
        """Finish a normal word; in root mode, fold runs of p equal letters."""
        if not self.folds:
            return {w: self.ring.one()}
        p = self.fold_p
        coeff = None
        out: list[int] = []
        i = 0
        n = len(w)
        while i < n:
            g = w[i]
            j = i
            while j < n and w[j] == g:
                j += 1
            r = j - i
            if g in self.folds and r >= p:
                k, rem = divmod(r, p)
                mono = self.ring.monomial({self.folds[g]: k})
                coeff = mono if coeff is None else coeff * mono
                out.extend([g] * rem)
            else:
                out.extend([g] * r)
            i = j
        if coeff is None:
            return {w: self.ring.one()}
        return {tuple(out): coeff}

    def nf_insert(self, u: Word, g: int) -> dict[Word, Coeff]:
        """Normal form of (normal word u) * (letter g)."""
        key = (u, g)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        self.steps += 1
        if self.steps > self.fuel:
            raise EngineFuelError(
                f"normalization exceeded {self.fuel} steps; presentation "
                f"with letters {self.names}")
        rule = self.pair_rules.get((u[-1], g)) if u else None
        if rule is None:
            out = self._emit(u + (g,))
        else:
            prefix = u[:-1]
            acc: dict[Word, Coeff] = {}
            for t, ct in rule.items():
                polys: dict[Word, Coeff] = {prefix: ct}
                for letter in t:
                    nxt: dict[Word, Coeff] = {}
                    for w, c in polys.items():
                        for w2, c2 in self.nf_insert(w, letter).items():
                            cc = c * c2
                            s = nxt.get(w2)
                            s = cc if s is None else s + cc
                            if s.is_zero():
                                nxt.pop(w2, None)
                            else:
                                nxt[w2] = s
                    polys = nxt
                for w, c in polys.items():
                    s = acc.get(w)
                    s = c if s is None else s + c
                    if s.is_zero():
                        acc.pop(w, None)
                    else:
                        acc[w] = s
            out = acc
        self._cache[key] = out
        return out

    def nf_word(self, w: Word) -> dict[Word, Coeff]:
        """Normal form of an arbitrary word, from scratch."""
        polys: dict[Word, Coeff] = {(): self.ring.one()}
        for g in w:
            nxt: dict[Word, Coeff] = {}
            for u, c in polys.items():
                for u2, c2 in self.nf_insert(u, g).items():
                    cc = c * c2
                    s = nxt.get(u2)
                    s = cc if s is None else s + cc
                    if s.is_zero():
                        nxt.pop(u2, None)
                    else:
                        nxt[u2] = s
            polys = nxt
        return polys

    def nf_concat(self, u: Word, w: Word) -> dict[Word, Coeff]:
        """Normal form of (normal u) * (normal w)."""
        polys: dict[Word, Coeff] = {u: self.ring.one()}
        for g in w:
            nxt: dict[Word, Coeff] = {}
            for x, c in polys.items():
                for x2, c2 in self.nf_insert(x, g).items():
                    cc = c * c2
                    s = nxt.get(x2)
                    s = cc if s is None else s + cc
                    if s.is_zero():
                        nxt.pop(x2, None)
                    else:
                        nxt[x2] = s
            polys = nxt
        return polys

    def word_str(self, w: Word) -> str:
        return "*".join(self.names[g] for g in w) if w else "1"


def diamond_check(pres: Presentation) -> list[str]:
    """All length-3 overlap ambiguities of the pair rules; returns failures.

    For letters a, b, c where both (a,b) and (b,c) rewrite, the word a*b*c
    reduces two ways; confluence demands both normalize identically.
    """
    bad = []
    rules = pres.pair_rules
    for (a, b1) in rules:
        for (b2, c) in rules:
            if b1 != b2:
                continue
            # reduce at the left pair first
            left: dict[Word, Coeff] = {}
            for t, ct in rules[(a, b1)].items():
                for w, cw in pres.nf_word(t + (c,)).items():
                    s = left.get(w)
                    s = ct * cw if s is None else s + ct * cw
                    if s.is_zero():
                        left.pop(w, None)
                    else:
                        left[w] = s
            # reduce at the right pair first
            right: dict[Word, Coeff] = {}
            for t, ct in rules[(b2, c)].items():
                for w, cw in pres.nf_word((a,) + t).items():
                    s = right.get(w)
                    s = ct * cw if s is None else s + ct * cw
                    if s.is_zero():
                        right.pop(w, None)
                    else:
                        right[w] = s
            if left != right:
                bad.append(f"overlap {pres.word_str((a, b1, c))}: "
                           f"{left} != {right}")
    return bad


# ---------------------------------------------------------------------------
# NcPoly
# ---------------------------------------------------------------------------


class NcPoly:
    """A finite sum of normal words with ring coefficients, tied to a Presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict[Word, Coeff]):
        self.pres = pres
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(pres: Presentation) -> "NcPoly":
        return NcPoly(pres, {})

    @staticmethod
    def one(pres: Presentation) -> "NcPoly":
        return NcPoly(pres, {(): pres.ring.one()})

    @staticmethod
    def gen(pres: Presentation, name: str) -> "NcPoly":
        return NcPoly(pres, {(pres.index[name],): pres.ring.one()})

    @staticmethod
    def from_word(pres: Presentation, w: Word, coeff=None) -> "NcPoly":
        out: dict[Word, Coeff] = {}
        c0 = pres.ring.one() if coeff is None else coeff
        for u, c in pres.nf_word(w).items():
            cc = c0 * c
            if not cc.is_zero():
                out[u] = cc
        return NcPoly(pres, out)

    # -- scalar coercion ---------------------------------------------------

    def _scalar(self, x) -> Optional[Coeff]:
        r = self.pres.ring
        if isinstance(x, (int, Fraction)):
            return r.lift_rational(x)
        if isinstance(x, FormalScalar):
            return r.lift_formal(x)
        if isinstance(x, RootScalar) and r.kind == "root":
            return r.constant(x)
        if isinstance(x, CentralPoly) and r.kind == "root":
            return x
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, NcPoly):
            t = dict(self.terms)
            for w, c in other.terms.items():
                s = t.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    t.pop(w, None)
                else:
                    t[w] = s
            return NcPoly(self.pres, t)
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self + NcPoly(self.pres, {(): c} if not c.is_zero() else {})

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        o = other if isinstance(other, NcPoly) else None
        if o is None:
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            o = NcPoly(self.pres, {(): c} if not c.is_zero() else {})
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            out: dict[Word, Coeff] = {}
            for u, cu in self.terms.items():
                for w, cw in other.terms.items():
                    cuw = cu * cw
                    for t, ct in self.pres.nf_concat(u, w).items():
                        c = cuw * ct
                        s = out.get(t)
                        s = c if s is None else s + c
                        if s.is_zero():
                            out.pop(t, None)
                        else:
                            out[t] = s
            return NcPoly(self.pres, out)
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        if c.is_zero():
            return NcPoly.zero(self.pres)
        out = {}
        for w, cw in self.terms.items():
            s = c * cw
            if not s.is_zero():
                out[w] = s
        return NcPoly(self.pres, out)

    def __rmul__(self, other):
        # scalars are central, so left and right scalar action agree
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self * other

    def __pow__(self, n: int) -> "NcPoly":
        if n < 0:
            raise ValueError("use the algebra's explicit inverses for negative powers")
        out = NcPoly.one(self.pres)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, NcPoly):
            return self.pres is other.pres and self.terms == other.terms
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        if c.is_zero():
            return not self.terms
        return self.terms == {(): c}

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff_of(self, w: Word) -> Coeff:
        c = self.terms.get(w)
        if c is None:
            zero = getattr(self.pres.ring, "zero", None)
            return zero() if zero else FormalScalar.zero()
        return c

    def map_coeffs(self, f) -> "NcPoly":
        out = {}
        for w, c in self.terms.items():
            v = f(c)
            if not v.is_zero():
                out[w] = v
        return NcPoly(self.pres, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            parts.append(f"({self.terms[w]!r})*{self.pres.word_str(w)}")
        return " + ".join(parts)


def commutator(x: NcPoly, y: NcPoly) -> NcPoly:
    return x * y - y * x


# ---------------------------------------------------------------------------
# the genus-1 handle algebra in transversal generators
# ---------------------------------------------------------------------------


def _q(k: int) -> FormalScalar:
    return FormalScalar.q_power(k)


def _x_pair_rules(idx: dict[str, int], with_trace_inverse: bool) -> dict[tuple[int, int], dict[Word, FormalScalar]]:
    """The straightening table for the transversal presentation.

    Defining relations: a11 b11 = q b11 a11; X_i commute with a11 and b11;
    X1 X2 = q^2 X2 X1 + (q^2 - 1), likewise (X2,X3) and (X3,X4);
    X1 X3 = q^-2 X3 X1;  X2 X4 = q^-2 X4 X2;  X1 X4 = q^2 X4 X1.
    The trace-entry inverse q-commutes: it passes X1, X3 at cost q^2 and
    X2, X4 at cost q^-2, and commutes with a11, b11.
    """
    one = FormalScalar.one()
    rules: dict[tuple[int, int], dict[Word, FormalScalar]] = {}

    def swap(left: str, right: str, coeff: FormalScalar, extra: Optional[FormalScalar] = None):
        l, r = idx[left], idx[right]
        rhs: dict[Word, FormalScalar] = {(r, l): coeff}
        if extra is not None and not extra.is_zero():
            rhs[()] = extra
        rules[(l, r)] = rhs

    def cancel(left: str, right: str):
        rules[(idx[left], idx[right])] = {(): one}

    has_inverses = "a11inv" in idx
    if has_inverses:
        cancel("a11", "a11inv")
        cancel("a11inv", "a11")
        cancel("b11", "b11inv")
        cancel("b11inv", "b11")
        swap("b11inv", "a11inv", _q(-1))
        swap("b11inv", "a11", _q(1))
        swap("b11", "a11inv", _q(1))
    swap("b11", "a11", _q(-1))

    a_letters = ["a11inv", "a11", "b11inv", "b11"] if has_inverses else ["a11", "b11"]
    for xi in ("X1", "X2", "X3", "X4"):
        for al in a_letters:
            swap(xi, al, one)

    eps = _q(-2) - one  # q^-2 - 1
    swap("X2", "X1", _q(-2), eps)
    swap("X3", "X2", _q(-2), eps)
    swap("X4", "X3", _q(-2), eps)
    swap("X3", "X1", _q(2))
    swap("X4", "X2", _q(2))
    swap("X4", "X1", _q(-2))

    if with_trace_inverse:
        for al in a_letters:
            swap("trinv", al, one)
        swap("trinv", "X1", _q(2))
        swap("trinv", "X3", _q(2))
        swap("trinv", "X2", _q(-2))
        swap("trinv", "X4", _q(-2))
    return rules


class HandleAlgebra:
    """The genus-1 algebra in transversal generators, formal or root mode.

    Exposes the six (or nine) letters, explicit inverses, the quantum trace
    entry as a polynomial, and the images of the original handle-matrix
    generators a_mn, b_mn under the change of generators.
    """

    def __init__(self, mode: str = "formal", p: Optional[int] = None,
                 with_trace_inverse: bool = False):
        if mode not in ("formal", "root"):
            raise ValueError("mode must be 'formal' or 'root'")
        if mode == "root":
            if p is None or p < 3 or p % 2 == 0:
                raise ValueError("root mode needs odd p >= 3")
            if with_trace_inverse:
                raise ValueError("root mode carries the trace inverse through the MU symbol")
            names = ["a11", "b11", "X1", "X2", "X3", "X4"]
            ring = CentralRing(p, ["A11", "B11", "X1P", "X2P", "X3P", "X4P", "MU"],
                               laurent=("A11", "B11"))
            idx = {n: i for i, n in enumerate(names)}
            rules = _x_pair_rules(idx, with_trace_inverse=False)
            folds = {idx["a11"]: "A11", idx["b11"]: "B11",
                     idx["X1"]: "X1P", idx["X2"]: "X2P",
                     idx["X3"]: "X3P", idx["X4"]: "X4P"}
            self.pres = Presentation(names, ring, rules, folds=folds)
        else:
            names = ["a11inv", "a11", "b11inv", "b11", "X1", "X2", "X3", "X4"]
            if with_trace_inverse:
                names.append("trinv")
            ring = FormalRing()
            idx = {n: i for i, n in enumerate(names)}
            rules = _x_pair_rules(idx, with_trace_inverse)
            self.pres = Presentation(names, ring, rules)
        self.mode = mode
        self.p = p
        self.ring = ring
        self._ab_cache: Optional[dict[str, NcPoly]] = None

    # -- elements ----------------------------------------------------------

    def gen(self, name: str) -> NcPoly:
        return NcPoly.gen(self.pres, name)

    def one(self) -> NcPoly:
        return NcPoly.one(self.pres)

    def zero(self) -> NcPoly:
        return NcPoly.zero(self.pres)

    def scalar(self, x) -> NcPoly:
        out = self.one() * x
        if out is NotImplemented:
            raise TypeError(f"cannot use {x!r} as a scalar here")
        return out

    def q(self, k: int = 1) -> NcPoly:
        return self.scalar(FormalScalar.q_power(k))

    def inv(self, name: str) -> NcPoly:
        """Inverse of a11 or b11 (or the trace entry in formal mode)."""
        if self.mode == "formal":
            return self.gen({"a11": "a11inv", "b11": "b11inv", "M11": "trinv"}[name])
        pm1 = self.p - 1
        if name == "a11":
            return NcPoly(self.pres, {(self.pres.index["a11"],) * pm1:
                                      self.ring.monomial({"A11": -1})})
        if name == "b11":
            return NcPoly(self.pres, {(self.pres.index["b11"],) * pm1:
                                      self.ring.monomial({"B11": -1})})
        if name == "M11":
            mu = NcPoly(self.pres, {(): self.ring.symbol("MU")})
            return mu * self.m11() ** pm1
        raise KeyError(name)

    def m11(self) -> NcPoly:
        """The (1,1) entry of the monodromy: q^-2 (1 + X1X2 + X1X4 + X3X4 + X1X2X3X4)."""
        x1, x2, x3, x4 = (self.gen(n) for n in ("X1", "X2", "X3", "X4"))
        return self.q(-2) * (1 + x1 * x2 + x1 * x4 + x3 * x4 + x1 * x2 * x3 * x4)

    # -- original handle-matrix generators ---------------------------------

    def ab(self, name: str) -> NcPoly:
        """Image of a handle-matrix generator (a11, a12, ..., b22, inverses)."""
        if self._ab_cache is None:
            a = self.gen("a11")
            b = self.gen("b11")
            ai = self.inv("a11")
            bi = self.inv("b11")
            x1, x2, x3, x4 = (self.gen(n) for n in ("X1", "X2", "X3", "X4"))
            q2 = FormalScalar.q_power(1) ** 2
            img: dict[str, NcPoly] = {
                "a11": a, "b11": b, "a11inv": ai, "b11inv": bi,
                "a12": a * x1 * bi * bi + q2 * a ** 3 * x3 * bi * bi,
                "a21": ai * x2 * b * b,
                "b12": a * a * x3 * bi,
                "b21": ai * ai * x4 * b + q2 * ai * ai * x2 * b ** 3,
            }
            img["a22"] = ai * (1 + q2 * img["a21"] * img["a12"])
            img["b22"] = bi * (1 + q2 * img["b21"] * img["b12"])
            self._ab_cache = img
        return self._ab_cache[name]

    def transversal_from_ab(self) -> dict[str, NcPoly]:
        """The defining combinations, for round-trip checks:
        X1 = (a11^-1 a12 - b11^-1 b12) b11^2,  X2 = a11 a21 b11^-2,
        X3 = a11^-2 b12 b11,  X4 = (b21 b11^-1 - a21 a11^-1) a11^2.
        """
        ai, bi = self.ab("a11inv"), self.ab("b11inv")
        a, b = self.ab("a11"), self.ab("b11")
        return {
            "X1": (ai * self.ab("a12") - bi * self.ab("b12")) * b * b,
            "X2": a * self.ab("a21") * bi * bi,
            "X3": ai * ai * self.ab("b12") * b,
            "X4": (self.ab("b21") * bi - self.ab("a21") * ai) * a * a,
        }
