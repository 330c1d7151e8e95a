"""Determinantal functions on pairs of matrices ``(X, Y)``.

Labels are tuples: ``("g", i, j)``, ``("h", i, j)``, ``("f", k, l)``,
``("phi", k, l)`` and ``("c", i)``. Every evaluator accepts matrices with
Fraction or Dual entries.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

import numpy as np

from ..exact_core import (
    GenericityError,
    cols,
    det,
    hstack,
    identity,
    interpolate,
    inverse,
    rows,
)


def sign_s(n: int, k: int, l: int) -> int:
    """Sign attached to the phi functions."""
    if n % 2 == 0:
        return -1 if (k * (l + 1)) % 2 else 1
    e = (n - 1) // 2 + k * (k - 1) // 2 + l * (l - 1) // 2
    return -1 if e % 2 else 1


def charpoly_sign(n: int, i: int) -> int:
    return -1 if (i * (n - 1)) % 2 else 1


class Context:
    """A point ``(X, Y)`` with cached ``U = X^-1 Y`` and its powers."""

    def __init__(self, X: np.ndarray, Y: np.ndarray):
        self.X = X
        self.Y = Y
        self.n = X.shape[0]
        self._pow: dict = {}

    @cached_property
    def detX(self):
        return det(self.X)

    @cached_property
    def detY(self):
        return det(self.Y)

    @cached_property
    def Xinv(self):
        return inverse(self.X)

    @cached_property
    def U(self):
        return np.dot(self.Xinv, self.Y)

    def upow(self, k: int) -> np.ndarray:
        if k not in self._pow:
            self._pow[k] = identity(self.n) if k == 0 else np.dot(self.upow(k - 1), self.U)
        return self._pow[k]

    @cached_property
    def c_values(self) -> list:
        return c_coeffs(self.X, self.Y)


def G_matrix(X: np.ndarray, i: int, j: int) -> np.ndarray:
    n = X.shape[0]
    return cols(rows(X, i, n), j, j + n - i)


def H_matrix(Y: np.ndarray, i: int, j: int) -> np.ndarray:
    n = Y.shape[0]
    return cols(rows(Y, i, i + n - j), j, n)


def F_matrix(X: np.ndarray, Y: np.ndarray, k: int, l: int) -> np.ndarray:
    n = X.shape[0]
    return rows(hstack(cols(X, n - k + 1, n), cols(Y, n - l + 1, n)), n - k - l + 1, n)


def Phi_matrix(U: np.ndarray, k: int, l: int, upow=None) -> np.ndarray:
    """``[(U^0)^[n-k+1,n]  U^[n-l+1,n]  (U^2)^[n] ... (U^(n-k-l+1))^[n]]``.

    ``k = 0`` is allowed and gives no identity columns.
    """
    n = U.shape[0]
    if upow is None:
        cache = {0: identity(n), 1: U}

        def upow(m):
            if m not in cache:
                cache[m] = np.dot(upow(m - 1), U)
            return cache[m]

    parts = [cols(upow(0), n - k + 1, n), cols(U, n - l + 1, n)]
    for p in range(2, n - k - l + 2):
        parts.append(cols(upow(p), n))
    return hstack(*parts)


def g_value(X, i, j):
    return det(G_matrix(X, i, j))


def h_value(Y, i, j):
    return det(H_matrix(Y, i, j))


def f_value(X, Y, k, l):
    return det(F_matrix(X, Y, k, l))


def phi_tilde(U, k, l, upow=None):
    """``det Phi_kl(U)`` without sign or prefactor."""
    return det(Phi_matrix(U, k, l, upow))


def psi_value(U, k, l, upow=None):
    return sign_s(U.shape[0], k, l) * phi_tilde(U, k, l, upow)


def phi_value_ctx(ctx: Context, k: int, l: int):
    n = ctx.n
    m = n - k - l + 1
    return sign_s(n, k, l) * ctx.detX ** m * det(Phi_matrix(ctx.U, k, l, ctx.upow))


def c_coeffs(X: np.ndarray, Y: np.ndarray) -> list:
    """``[c_0, ..., c_n]`` with ``det(X + t Y) = sum t^i s_i c_i``."""
    n = X.shape[0]
    pts = list(range(n + 1))
    vals = [det(X + Y * Fraction(t)) for t in pts]
    a = interpolate(pts, vals)
    return [charpoly_sign(n, i) * a[i] for i in range(n + 1)]


def canonical(n: int, lab: tuple):
    """Resolve the boundary identifications between the f, g, h, phi families.

    Returns ``None`` for labels standing for the constant 1.
    """
    fam = lab[0]
    if fam == "f":
        k, l = lab[1], lab[2]
        if k == 0 and l == 0:
            return None
        if k == 0:
            return canonical(n, ("h", n - l + 1, n - l + 1))
        if l == 0:
            return canonical(n, ("g", n - k + 1, n - k + 1))
        if k + l == n:
            return ("phi", k, l)
        return lab
    if fam == "g":
        i, j = lab[1], lab[2]
        if j == i + 1:
            return canonical(n, ("f", n - i, 1))
        return lab
    if fam == "h":
        i, j = lab[1], lab[2]
        if j == i + 1 and i == n:
            return None
        return lab
    return lab


def evaluate(lab: tuple, ctx: Context):
    """Value of one labelled function at the point held by ``ctx``."""
    lab0 = lab
    lab = canonical(ctx.n, lab)
    if lab is None:
        return Fraction(1)
    fam = lab[0]
    if fam == "g":
        return g_value(ctx.X, lab[1], lab[2])
    if fam == "h":
        return h_value(ctx.Y, lab[1], lab[2])
    if fam == "f":
        return f_value(ctx.X, ctx.Y, lab[1], lab[2])
    if fam == "phi":
        return phi_value_ctx(ctx, lab[1], lab[2])
    if fam == "c":
        return ctx.c_values[lab[1]]
    raise KeyError(lab0)


def family_labels(n: int, with_c: bool = True) -> list:
    """Deterministic order: g row-major, then f, h, phi, and the c's."""
    out = [("g", i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    out += [("f", k, l) for k in range(1, n) for l in range(1, n - k)]
    out += [("h", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    out += [("phi", k, l) for k in range(1, n) for l in range(1, n - k + 1)]
    if with_c:
        out += [("c", i) for i in range(1, n)]
    return out


def label_name(lab) -> str:
    if lab[0] == "c":
        return f"c{lab[1]}"
    idx = lab[1:]
    sep = "" if all(0 <= x < 10 for x in idx) else "_"
    return lab[0] + sep.join(str(x) for x in idx) if sep == "" else lab[0] + "_" + "_".join(str(x) for x in idx)


def parse_label(name: str) -> tuple:
    for fam in ("phi", "g", "h", "f", "c"):
        if name.startswith(fam):
            rest = name[len(fam):]
            if rest.startswith("_"):
                idx = tuple(int(x) for x in rest[1:].split("_"))
            else:
                idx = tuple(int(ch) for ch in rest)
            return (fam,) + idx
    raise ValueError(f"unknown label {name!r}")


def evaluate_family(ctx: Context, labels) -> dict:
    return {lab: evaluate(lab, ctx) for lab in labels}


def check_nonzero(values: dict) -> None:
    for lab, v in values.items():
        if v == 0:
            raise GenericityError(f"{label_name(lab)} vanishes")
