"""Exact matrix helpers on numpy object arrays.

Entries are ``Fraction``, ``int``, :class:`Dual` or :class:`MultiPoly`.
Index helpers taking ``(a, b)`` ranges are 1-based and inclusive, which keeps
the determinantal formulas readable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import numpy as np

from .dual import Dual, value


class GenericityError(ArithmeticError):
    """A pivot or denominator vanished at the chosen point."""


def is_zero(x) -> bool:
    if isinstance(x, Dual):
        return x.a == 0
    return x == 0


def mat(rows) -> np.ndarray:
    """Object array of Fractions from nested sequences."""
    rows = [list(r) for r in rows]
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = x if isinstance(x, (Fraction, Dual)) or hasattr(x, "terms") else Fraction(x)
    return out


def zeros(r: int, c: int | None = None) -> np.ndarray:
    c = r if c is None else c
    out = np.empty((r, c), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def unit(n: int, i: int) -> np.ndarray:
    """Column vector e_i (1-based) as an ``n x 1`` array."""
    out = zeros(n, 1)
    out[i - 1, 0] = Fraction(1)
    return out


def elementary(n: int, i: int, j: int) -> np.ndarray:
    out = zeros(n)
    out[i - 1, j - 1] = Fraction(1)
    return out


def antidiagonal(n: int) -> np.ndarray:
    """The longest permutation w0 as a matrix."""
    out = zeros(n)
    for i in range(n):
        out[i, n - 1 - i] = Fraction(1)
    return out


def cyclic_shift(n: int) -> np.ndarray:
    """e21 + e32 + ... + e_{n,n-1} + e_{1n}."""
    out = zeros(n)
    for i in range(1, n):
        out[i, i - 1] = Fraction(1)
    out[0, n - 1] += Fraction(1)
    return out


def upper_shift(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n - 1):
        out[i, i + 1] = Fraction(1)
    return out


def cols(A: np.ndarray, a: int, b: int | None = None) -> np.ndarray:
    b = a if b is None else b
    return A[:, a - 1:b] if b >= a else A[:, 0:0]


def rows(A: np.ndarray, a: int, b: int | None = None) -> np.ndarray:
    b = a if b is None else b
    return A[a - 1:b, :] if b >= a else A[0:0, :]


def block(A: np.ndarray, r: tuple[int, int], c: tuple[int, int]) -> np.ndarray:
    return cols(rows(A, *r), *c)


def pick_cols(A: np.ndarray, idx) -> np.ndarray:
    """Columns listed by 1-based index."""
    return A[:, [i - 1 for i in idx]] if len(idx) else A[:, 0:0]


def pick_rows(A: np.ndarray, idx) -> np.ndarray:
    return A[[i - 1 for i in idx], :] if len(idx) else A[0:0, :]


def hstack(*parts) -> np.ndarray:
    parts = [p for p in parts if p.shape[1] > 0]
    return np.concatenate(parts, axis=1)


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.dot(A, B)


def mpow(A: np.ndarray, k: int) -> np.ndarray:
    out = identity(A.shape[0])
    for _ in range(k):
        out = np.dot(out, A)
    return out


def trace(A: np.ndarray):
    s = Fraction(0)
    for i in range(A.shape[0]):
        s = s + A[i, i]
    return s


def strict_upper(A: np.ndarray) -> np.ndarray:
    out = zeros(*A.shape)
    for i in range(A.shape[0]):
        for j in range(i + 1, A.shape[1]):
            out[i, j] = A[i, j]
    return out


def strict_lower(A: np.ndarray) -> np.ndarray:
    out = zeros(*A.shape)
    for i in range(A.shape[0]):
        for j in range(min(i, A.shape[1])):
            out[i, j] = A[i, j]
    return out


def diagonal_part(A: np.ndarray) -> np.ndarray:
    out = zeros(*A.shape)
    for i in range(min(A.shape)):
        out[i, i] = A[i, i]
    return out


def values(A: np.ndarray) -> np.ndarray:
    """Strip dual parts entrywise."""
    out = np.empty(A.shape, dtype=object)
    for idx in np.ndindex(A.shape):
        out[idx] = value(A[idx])
    return out


def _det_leibniz(M):
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total - term if inv % 2 else total + term
    return total


def _det_laplace(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n <= 3:
        return _det_leibniz(M)
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det_laplace(minor)
        total = total - term if j % 2 else total + term
    return total


def det(A):
    """Determinant by fraction-free (Bareiss) elimination with pivoting.

    Works for Fraction and Dual entries; polynomial entries fall back to
    cofactor expansion so that no division is needed. At a singular value
    part the dual derivative is recovered column by column.
    """
    M = [list(r) for r in np.asarray(A, dtype=object)]
    n = len(M)
    if n == 0:
        return Fraction(1)
    if any(hasattr(x, "terms") for r in M for x in r):
        return _det_laplace(M)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        p = next((i for i in range(k, n) if not is_zero(M[i][k])), None)
        if p is None:
            return _singular_det(A)
        if p != k:
            M[k], M[p] = M[p], M[k]
            sign = -sign
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - rik * rk[j]) / prev
        prev = pk
    out = M[n - 1][n - 1]
    return out if sign > 0 else -out


def _singular_det(A):
    A = np.asarray(A, dtype=object)
    if not any(isinstance(x, Dual) for x in A.flat):
        return Fraction(0)
    V = values(A)
    D = np.empty(A.shape, dtype=object)
    for idx in np.ndindex(A.shape):
        x = A[idx]
        D[idx] = x.b if isinstance(x, Dual) else Fraction(0)
    d = Fraction(0)
    for j in range(A.shape[1]):
        W = V.copy()
        W[:, j] = D[:, j]
        d += det(W)
    return Dual(Fraction(0), d)


def inverse(A: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse; raises GenericityError when singular."""
    n = A.shape[0]
    M = [list(A[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        p = next((i for i in range(k, n) if not is_zero(M[i][k])), None)
        if p is None:
            raise GenericityError("singular matrix")
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        M[k] = [x / piv for x in M[k]]
        for i in range(n):
            if i != k and not (M[i][k] == 0):
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = M[i][n + j]
    return out


def rank(A) -> int:
    M = [[Fraction(x) for x in r] for r in np.asarray(A, dtype=object)]
    if not M:
        return 0
    r = 0
    ncols = len(M[0])
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def solve(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.dot(inverse(A), b)


def interpolate(xs, ys) -> list:
    """Coefficients (low to high) of the polynomial through the points."""
    n = len(xs)
    coef = [Fraction(y) if not isinstance(y, Dual) else y for y in ys]
    xs = [Fraction(x) for x in xs]
    # Newton divided differences, then expand into the monomial basis.
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[n - 1]]
    for i in range(n - 2, -1, -1):
        shifted = [Fraction(0)] + poly
        for k in range(len(poly)):
            shifted[k] = shifted[k] - xs[i] * poly[k]
        shifted[0] = shifted[0] + coef[i]
        poly = shifted
    return poly


def charpoly_coeffs(A: np.ndarray) -> list:
    """``[1, c1, ..., cn]`` with ``det(t - A) = t^n + c1 t^(n-1) + ... + cn``."""
    n = A.shape[0]
    pts = list(range(n + 1))
    vals = [det(identity(n) * Fraction(t) - A) for t in pts]
    low_to_high = interpolate(pts, vals)
    return list(reversed(low_to_high))


def to_fraction_matrix(A) -> np.ndarray:
    return mat([[Fraction(x) for x in r] for r in np.asarray(A, dtype=object)])


def equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and all(a == b for a, b in zip(A.flat, B.flat))
