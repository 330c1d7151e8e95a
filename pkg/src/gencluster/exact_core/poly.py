"""Sparse multivariate polynomials with integer-packed monomials.

A monomial is stored as one Python int whose 16-bit fields hold the
exponents, first variable in the highest field. Multiplying monomials is
integer addition and comparing ints is the lexicographic order, which keeps
long division cheap.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

FIELD = 16
_FIELD_MASK = (1 << FIELD) - 1


class PolyDivisionError(ArithmeticError):
    """Division left a nonzero remainder."""

    def __init__(self, remainder: "MultiPoly"):
        super().__init__(f"non-exact division, remainder has {len(remainder.terms)} terms")
        self.remainder = remainder


class Ring:
    """Variable names plus packing constants shared by its polynomials."""

    def __init__(self, names):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self._guard = sum(1 << (FIELD * k + FIELD - 1) for k in range(self.nvars))

    def pack(self, exps) -> int:
        m = 0
        for e in exps:
            if e < 0 or e >= 1 << (FIELD - 1):
                raise ValueError("exponent out of range")
            m = (m << FIELD) | e
        return m

    def unpack(self, m: int) -> tuple:
        out = []
        for _ in range(self.nvars):
            out.append(m & _FIELD_MASK)
            m >>= FIELD
        return tuple(reversed(out))

    def divides(self, a: int, b: int) -> bool:
        """True when monomial ``a`` divides ``b``."""
        return ((b | self._guard) - a) & self._guard == self._guard

    def gen(self, name) -> "MultiPoly":
        k = self.names.index(name)
        exps = [0] * self.nvars
        exps[k] = 1
        return MultiPoly(self, {self.pack(exps): 1})

    def gens(self) -> list:
        return [self.gen(nm) for nm in self.names]

    def const(self, c) -> "MultiPoly":
        return MultiPoly(self, {0: c} if c != 0 else {})

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)


class MultiPoly:
    """Polynomial with rational coefficients over a fixed :class:`Ring`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict | None = None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return self.ring.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for m, c in o.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return MultiPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly(self.ring)
            return MultiPoly(self.ring, {m: c * other for m, c in self.terms.items()})
        t: dict = {}
        get = t.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                t[m] = get(m, 0) + c1 * c2
        return MultiPoly(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return poly_divide_exact(self, other)
        return MultiPoly(self.ring, {m: Fraction(c) / other for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        return self.terms == self._coerce(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(self.ring.unpack(m)) for m in self.terms), default=-1)

    def leading(self):
        m = max(self.terms)
        return m, self.terms[m]

    def evaluate(self, point: dict):
        vals = [Fraction(point[nm]) for nm in self.ring.names]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(vals, self.ring.unpack(m)):
                if e:
                    term *= v ** e
            total += term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True)[:6]:
            e = self.ring.unpack(m)
            mono = "*".join(f"{nm}^{k}" if k > 1 else nm for nm, k in zip(self.ring.names, e) if k)
            parts.append(f"{self.terms[m]}*{mono}" if mono else f"{self.terms[m]}")
        more = " + ..." if len(self.terms) > 6 else ""
        return " + ".join(parts) + more


def poly_divmod(f: MultiPoly, g: MultiPoly):
    """Multivariate division in lex order. Returns ``(q, r)`` with f = q g + r."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    lg, cg = g.leading()
    rest = [(m, c) for m, c in g.terms.items() if m != lg]
    work = dict(f.terms)
    heap = [-m for m in work]
    heapq.heapify(heap)
    q: dict = {}
    r: dict = {}
    while heap:
        m = -heapq.heappop(heap)
        c = work.pop(m, 0)
        if c == 0:
            continue
        if ring.divides(lg, m):
            t = m - lg
            qc = Fraction(c) / cg
            if qc.denominator == 1:
                qc = qc.numerator
            q[t] = qc
            for dm, dc in rest:
                mm = t + dm
                v = work.get(mm)
                if v is None:
                    work[mm] = -qc * dc
                    heapq.heappush(heap, -mm)
                else:
                    work[mm] = v - qc * dc
        else:
            r[m] = c
    return MultiPoly(ring, q), MultiPoly(ring, r)


def poly_divide_exact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact quotient; raises :class:`PolyDivisionError` with the remainder."""
    q, r = poly_divmod(f, g)
    if not r.is_zero():
        raise PolyDivisionError(r)
    return q
