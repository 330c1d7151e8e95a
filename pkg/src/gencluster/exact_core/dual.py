"""First-order dual numbers over exact rationals."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class Dual:
    """Value plus infinitesimal part, ``a + b*eps`` with ``eps**2 = 0``."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a
        self.b = b

    @staticmethod
    def _lift(x) -> "Dual":
        return x if isinstance(x, Dual) else Dual(x, 0)

    def __add__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented  # let the array broadcast
        if isinstance(other, Dual):
            return Dual(self.a + other.a, self.b + other.b)
        return Dual(self.a + other, self.b)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented  # let the array broadcast
        if isinstance(other, Dual):
            return Dual(self.a - other.a, self.b - other.b)
        return Dual(self.a - other, self.b)

    def __rsub__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented  # let the array broadcast
        return Dual(other - self.a, -self.b)

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented  # let the array broadcast
        if isinstance(other, Dual):
            return Dual(self.a * other.a, self.a * other.b + self.b * other.a)
        return Dual(self.a * other, self.b * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented  # let the array broadcast
        if isinstance(other, Dual):
            if other.a == 0:
                raise ZeroDivisionError("dual division by a pure infinitesimal")
            inv = Fraction(1) / other.a
            return Dual(self.a * inv, (self.b * other.a - self.a * other.b) * inv * inv)
        return Dual(self.a / Fraction(other), self.b / Fraction(other))

    def __rtruediv__(self, other):
        return Dual._lift(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("only integer powers")
        if k < 0:
            return 1 / self ** -k
        out = Dual(1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = Dual._lift(other)
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Dual({self.a}, {self.b})"


def value(x):
    return x.a if isinstance(x, Dual) else x


def deriv(x):
    return x.b if isinstance(x, Dual) else 0
