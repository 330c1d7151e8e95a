"""Special matrices used to show that exchange values are not divisible.

Every fixture is a block matrix whose blocks are identities, reversed
identities, scalars or columns of ones. Block sizes are fixed by the
requirement that each block row and block column carries exactly one
square block.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exact_core import zeros


def block_matrix(heights, widths, placements, extra=()) -> np.ndarray:
    """Assemble a matrix from block placements.

    ``placements`` holds ``(r, c, kind, value)`` with 1-based block indices;
    ``kind`` is ``"I"`` (identity), ``"J"`` (antidiagonal), ``"s"`` (a
    scalar in a 1x1 block) or ``"ones"`` (a column filled with ``value``).
    ``extra`` adds ``(i, j, value)`` entries, 1-based.
    """
    ro = np.cumsum([0] + list(heights))
    co = np.cumsum([0] + list(widths))
    A = zeros(int(ro[-1]), int(co[-1]))
    for r, c, kind, val in placements:
        h, w = heights[r - 1], widths[c - 1]
        i0, j0 = int(ro[r - 1]), int(co[c - 1])
        if kind == "ones":
            for i in range(h):
                A[i0 + i, j0] = Fraction(val)
            continue
        if h != w:
            raise ValueError(f"block ({r},{c}) is {h}x{w}")
        for i in range(h):
            j = i if kind in ("I", "s") else h - 1 - i
            A[i0 + i, j0 + j] = Fraction(val)
    for i, j, val in extra:
        A[i - 1, j - 1] += Fraction(val)
    return A


def _perm(sizes_by_row, row_to_col, ncol, kinds=None, values=None, extra=()):
    """A block permutation pattern: row block ``r`` holds a square block in column ``row_to_col[r]``."""
    widths = [0] * ncol
    for r, c in enumerate(row_to_col):
        widths[c - 1] = sizes_by_row[r]
    kinds = kinds or {}
    values = values or {}
    pl = []
    for r, c in enumerate(row_to_col, start=1):
        if sizes_by_row[r - 1] == 0:
            continue
        pl.append((r, c, kinds.get(r, "I"), values.get(r, 1)))
    return block_matrix(sizes_by_row, widths, pl, extra)


def sigma11(n: int, t) -> np.ndarray:
    return _perm([1, n - 3, 1, 1], [4, 1, 2, 3], 4, values={3: t})


def sigma_kl(n: int, k: int, l: int) -> np.ndarray:
    """Fixture for ``phi_kl`` with ``k, l > 1`` and ``k + l < n``."""
    m = n - k - l - 1
    if k == l:
        return _perm([1, 1, k - 2, 1, m, 1, k - 1], [7, 4, 6, 1, 3, 5, 2], 7, kinds={3: "J", 7: "J"})
    if k > l:
        return _perm(
            [1, 1, l - 2, 1, m, 1, k - l - 1, 1, l - 1], [9, 4, 8, 1, 3, 7, 6, 5, 2], 9,
            kinds={3: "J", 9: "J"}, extra=[(2, n - l, 1)])
    return _perm([1, m + 1, l - 2, 1, 1, k - 1], [6, 1, 5, 2, 4, 3], 6, extra=[(m + 2, n - l, 1)])


def sigma_k1(n: int, k: int) -> np.ndarray:
    """Fixture for ``phi_k1`` with ``1 < k < n - 1``."""
    if k == 2:
        return _perm([1, n - 4, 1, 2], [4, 1, 3, 2], 4, extra=[(n - 1, n - 1, 1)])
    m = n - k - 2
    return _perm([1, m, 1, 1, k - 3, 2], [6, 1, 3, 5, 4, 2], 6)


def sigma_1l(n: int, l: int) -> np.ndarray:
    """Fixture for ``phi_1l`` with ``1 < l < n - 1``."""
    m = n - l - 1
    return _perm([1, m, l - 2, 2], [4, 1, 3, 2], 4, extra=[(n - l, n - l, 1)])


def x_circ(n: int, i: int, t) -> np.ndarray:
    """Lower bidiagonal, ones on both diagonals except ``t`` at ``(i, i)``."""
    X = zeros(n)
    for p in range(n):
        X[p, p] = Fraction(1)
        if p:
            X[p, p - 1] = Fraction(1)
    X[i - 1, i - 1] = Fraction(t)
    return X


def _with_last_ones(sizes_by_row, row_to_col, ncol, t, z):
    """Permutation pattern plus a final column of ones with ``z`` on top and ``t`` in row 2."""
    widths = [0] * (ncol + 1)
    for r, c in enumerate(row_to_col):
        if c:
            widths[c - 1] = sizes_by_row[r]
    widths[ncol] = 1
    pl = []
    for r, c in enumerate(row_to_col, start=1):
        if c and sizes_by_row[r - 1]:
            pl.append((r, c, "s" if r == 2 else "I", t if r == 2 else 1))
        pl.append((r, ncol + 1, "ones", 1))
    A = block_matrix(sizes_by_row, widths, pl)
    A[0, A.shape[1] - 1] = Fraction(z)
    return A


def m_kl(n: int, k: int, l: int, t, z) -> np.ndarray:
    """Fixture for the irreducibility of ``psi_kl(U)``, for ``k + l < n``."""
    if l == 1:
        return _with_last_ones([1, 1, n - 3, 1], [3, 1, 2, 0], 3, t, z)
    if k >= l:
        m = n - 2 * l
        return _with_last_ones([1, 1, l - 1, 1, m - 1, l - 2, 1], [3, 1, 6, 2, 5, 4, 0], 6, t, z)
    # reconstructed block pattern, see the decisions log
    q = n - k - l
    return _with_last_ones([1, 1, q - 1, 1, l - 2, k - 1, 1], [3, 1, 2, 5, 6, 4, 0], 6, t, z)


def m_bar_kl(n: int, k: int, l: int, t, z) -> np.ndarray:
    """Fixture for the irreducibility of ``psi-bar_kl(X)``, for ``k, l >= 2``."""
    # reconstructed block pattern, see the decisions log
    m = n - k - l
    return _with_last_ones([1, 1, m - 1, 1, 0, k - 2, l - 1, 1], [3, 1, 2, 6, 4, 7, 5, 0], 7, t, z)


def p_poly(m: int, z, t):
    """Closed form of ``P_m(z, t)``."""
    from math import comb

    z, t = Fraction(z), Fraction(t)
    out = t ** (m - 1) * z ** m
    for i in range(m - 1):
        geo = sum((t ** e for e in range(i, m - 1)), Fraction(0))  # (t^(m-1) - t^i) / (t - 1)
        out += (-1) ** (m - i - 1) * comb(m, i) * geo * z ** i
    return out


def p_matrix(m: int, z, t) -> np.ndarray:
    """The ``m x m`` matrix whose determinant is ``P_m(z, t)``."""
    A = zeros(m)
    for i in range(m):
        for j in range(m):
            if i == 0:
                A[i, j] = Fraction(z) if j == 0 else Fraction(1)
            elif j < i:
                A[i, j] = Fraction(1)
            elif j == i:
                A[i, j] = Fraction(t) * z
            else:
                A[i, j] = Fraction(t)
    return A
