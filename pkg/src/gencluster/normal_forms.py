"""Gauss factorization and the normal forms of ``U = X^-1 Y``.

All routines are exact and work for Fraction or Dual entries. A vanishing
pivot raises :class:`GenericityError`.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exact_core import (
    GenericityError,
    antidiagonal,
    charpoly_coeffs,
    cyclic_shift,
    det,
    identity,
    inverse,
    is_zero,
    zeros,
)


def ldu(A: np.ndarray):
    """``A = L D U`` with unipotent lower ``L``, diagonal ``D``, unipotent upper ``U``."""
    n = A.shape[0]
    M = A.copy()
    L = identity(n)
    for k in range(n):
        if is_zero(M[k, k]):
            raise GenericityError(f"leading minor {k + 1} vanishes")
        for i in range(k + 1, n):
            f = M[i, k] / M[k, k]
            L[i, k] = f
            for j in range(k, n):
                M[i, j] = M[i, j] - f * M[k, j]
    D = zeros(n)
    Uu = identity(n)
    for i in range(n):
        D[i, i] = M[i, i]
        for j in range(i + 1, n):
            Uu[i, j] = M[i, j] / M[i, i]
    return L, D, Uu


def gauss(A: np.ndarray):
    """``A = A_{>0} A_0 A_{<0}``: unipotent upper, diagonal, unipotent lower.

    Computed from the LDU factorization of ``w0 A w0``; the pivots are the
    trailing principal minors of ``A``.
    """
    W = antidiagonal(A.shape[0])
    L, D, Uu = ldu(W.dot(A).dot(W))
    return W.dot(L).dot(W), W.dot(D).dot(W), W.dot(Uu).dot(W)


def ul_form(U: np.ndarray):
    """``U = B_+ N_-`` with ``B_+`` upper triangular and ``N_-`` unipotent lower."""
    Np, D, Nm = gauss(U)
    return Np.dot(D), Nm


def to_hessenberg(A: np.ndarray):
    """Conjugate by unipotent lower ``L`` with trivial first column.

    Returns ``(L, H)`` with ``H = L A L^-1`` upper Hessenberg. Pivots are the
    subdiagonal entries as they appear.
    """
    n = A.shape[0]
    H = A.copy()
    L = identity(n)
    for j in range(n - 2):
        piv = H[j + 1, j]
        if is_zero(piv):
            raise GenericityError("zero subdiagonal pivot in Hessenberg reduction")
        for i in range(j + 2, n):
            m = H[i, j] / piv
            if m == 0:
                continue
            H[i, :] = H[i, :] - m * H[j + 1, :]
            H[:, j + 1] = H[:, j + 1] + m * H[:, i]
            L[i, :] = L[i, :] - m * L[j + 1, :]
    return L, H


def bc_form(U: np.ndarray):
    """``U = N_- B_+ C N_-^-1`` with ``C`` the cyclic shift.

    ``N_-`` is unipotent lower triangular, ``B_+`` upper triangular.
    """
    n = U.shape[0]
    if is_zero(U[0, n - 1]):
        raise GenericityError("u_1n vanishes")
    N1 = identity(n)
    N1inv = identity(n)
    for i in range(1, n):
        r = U[i, n - 1] / U[0, n - 1]
        N1[i, 0] = -r
        N1inv[i, 0] = r
    U1 = N1.dot(U).dot(N1inv)
    L, H = to_hessenberg(U1)
    C = cyclic_shift(n)
    Bp = H.dot(C.T)
    Nm = inverse(L.dot(N1))
    return Nm, Bp


def bw_form(U: np.ndarray):
    """``U = N_- B_+ w0 N_-^-1``."""
    W = antidiagonal(U.shape[0])
    Vp, V0, Vm = gauss(W.dot(U))
    Nm = W.dot(Vp).dot(W)
    Bp = W.dot(V0.dot(Vm)).dot(W).dot(Vp)
    return Nm, Bp


def nmn_form(U: np.ndarray):
    """``U = (1 + nu e12) N_- M N_-^-1 (1 - nu e12)``.

    ``N_-`` is unipotent lower with trivial first column; ``M`` has
    ``m_1n = 0`` and vanishes at ``(i, n+2-j)`` for ``2 <= j < i <= n``.
    """
    n = U.shape[0]
    if n < 3:
        raise ValueError("the NMN form needs n >= 3")
    if is_zero(U[1, n - 1]):
        raise GenericityError("u_2n vanishes")
    nu = U[0, n - 1] / U[1, n - 1]
    E = zeros(n)
    E[0, 1] = Fraction(1)
    Up = (identity(n) - E * nu).dot(U).dot(identity(n) + E * nu)
    Np, Bp = bw_form(Up[1:, 1:])
    Nm = identity(n)
    Nm[1:, 1:] = Np
    M = inverse(Nm).dot(Up).dot(Nm)
    return nu, Nm, M


def nmn_pattern_ok(M: np.ndarray) -> bool:
    n = M.shape[0]
    if not is_zero(M[0, n - 1]):
        return False
    for i in range(2, n + 1):
        for j in range(2, i):
            if not is_zero(M[i - 1, n + 1 - j]):
                return False
    return True


def krylov(A: np.ndarray, v: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    K = zeros(n)
    w = v.reshape(n)
    for j in range(n):
        K[:, j] = w
        w = A.dot(w)
    return K


def toeplitz_upper(c: list) -> np.ndarray:
    """Unipotent upper Toeplitz matrix with ``c_i`` on the i-th superdiagonal."""
    n = len(c) - 1
    T = zeros(n)
    for i in range(n):
        for j in range(i, n):
            T[i, j] = c[j - i]
    return T


def first_row_companion(c: list) -> np.ndarray:
    """``[[g_1 ... g_n], [1_{n-1} 0]]`` with ``g_i = -c_i``."""
    n = len(c) - 1
    M = zeros(n)
    for j in range(n):
        M[0, j] = -c[j + 1]
    for i in range(1, n):
        M[i, i - 1] = Fraction(1)
    return M


def last_column_companion(c: list) -> np.ndarray:
    """Companion with ones below the diagonal and last column ``-c_n ... -c_1``."""
    n = len(c) - 1
    M = zeros(n)
    for i in range(1, n):
        M[i, i - 1] = Fraction(1)
    for i in range(n):
        M[i, n - 1] = -c[n - i]
    return M


def unit_subdiagonal_scaling(H: np.ndarray, last=Fraction(1)) -> np.ndarray:
    """Diagonal ``D`` with ``(D H D^-1)_{i+1,i} = 1`` and ``D_nn = last``."""
    n = H.shape[0]
    D = zeros(n)
    D[n - 1, n - 1] = last
    for i in range(n - 2, -1, -1):
        if is_zero(H[i + 1, i]):
            raise GenericityError("zero subdiagonal entry")
        D[i, i] = D[i + 1, i + 1] * H[i + 1, i]
    return D


def hessenberg_conjugator(H: np.ndarray) -> np.ndarray:
    """Unipotent upper ``N`` with ``N^-1 H N`` the first-row companion.

    ``H`` must be upper Hessenberg with ones on the subdiagonal.
    """
    n = H.shape[0]
    e1 = zeros(n, 1)
    e1[0, 0] = Fraction(1)
    return krylov(H, e1).dot(toeplitz_upper(charpoly_coeffs(H)))


def hessenberg_first_row(H: np.ndarray) -> np.ndarray:
    """``(-nu_12, ..., -nu_1n)`` read off the conjugator of ``H``."""
    N = hessenberg_conjugator(H)
    return np.array([-N[0, j] for j in range(1, H.shape[0])], dtype=object)


def companion_reduce(Mbar: np.ndarray, delta=None):
    """Scale ``Mbar`` to unit subdiagonal, then conjugate to first-row companion.

    Returns ``(N_plus, Delta, M_star)`` with
    ``M_star = N_plus Delta Mbar Delta^-1 N_plus^-1``.
    """
    D = delta if delta is not None else unit_subdiagonal_scaling(Mbar)
    H = D.dot(Mbar).dot(inverse(D))
    N = hessenberg_conjugator(H)
    Np = inverse(N)
    return Np, D, Np.dot(H).dot(N)


def first_row_from_spectrum(last_rows: np.ndarray, c: list) -> np.ndarray:
    """Recover the first row of ``A`` from its other rows and its spectrum.

    ``c = [1, c_1, ..., c_n]`` are the coefficients of ``det(t - A)``. The
    Krylov-like matrix ``Q`` has columns given by the coefficients of the
    first column of ``adj(t - A)``, which only involves rows 2..n.
    """
    n = last_rows.shape[1]
    from .exact_core import interpolate

    Q = zeros(n)
    pts = list(range(n))
    for k in range(n):
        vals = []
        for t in pts:
            R = -last_rows.copy()
            for i in range(n - 1):
                R[i, i + 1] = R[i, i + 1] + t
            minor = np.delete(R, k, axis=1)
            sgn = -1 if k % 2 else 1
            vals.append(sgn * det(minor))
        coeffs = interpolate(pts, vals)
        coeffs += [Fraction(0)] * (n - len(coeffs))
        for i in range(n):
            Q[k, i] = coeffs[n - 1 - i]
    T = toeplitz_upper(c)
    Cp = inverse(T).dot(last_column_companion(c)).dot(T)
    return Q[0, :].dot(Cp).dot(inverse(Q))


def glue_component_I(B_plus: np.ndarray, BbarC: np.ndarray) -> np.ndarray:
    """``w0 (w0 B_+)_{>0} (w0 Bbar_+ C)_{>0}^-1 w0``.

    Given ``U = B_+ N_-`` and ``U = Nbar_- Bbar_+ C Nbar_-^-1`` this returns
    ``Nbar_-``.
    """
    W = antidiagonal(B_plus.shape[0])
    P1 = gauss(W.dot(B_plus))[0]
    P2 = gauss(W.dot(BbarC))[0]
    return W.dot(P1).dot(inverse(P2)).dot(W)
