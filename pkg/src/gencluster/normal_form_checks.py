"""Round trips of the normal forms and the closed formulas for their entries.

Formulas stated up to sign are checked as: the ratio of the two sides is
+1 or -1 and the same at every point.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .double_seed.functions import Context, c_coeffs, charpoly_sign, h_value, phi_tilde, psi_value, sign_s
from .exact_core import (
    antidiagonal,
    charpoly_coeffs,
    cyclic_shift,
    det,
    equal,
    identity,
    inverse,
    zeros,
)
from .identities import IdentityReport
from .normal_forms import (
    bc_form,
    bw_form,
    companion_reduce,
    first_row_companion,
    first_row_from_spectrum,
    gauss,
    glue_component_I,
    hessenberg_conjugator,
    hessenberg_first_row,
    nmn_form,
    nmn_pattern_ok,
    ul_form,
    unit_subdiagonal_scaling,
)


def _e12(n):
    E = zeros(n)
    E[0, 1] = Fraction(1)
    return E


def round_trips(U: np.ndarray) -> dict:
    """Reconstruct ``U`` from each normal form; also re-factor the product."""
    n = U.shape[0]
    out = {}
    P, D, L = gauss(U)
    out["gauss"] = equal(P.dot(D).dot(L), U) and equal(gauss(P.dot(D).dot(L))[0], P)
    Nm, Bp = bc_form(U)
    C = cyclic_shift(n)
    V = Nm.dot(Bp).dot(C).dot(inverse(Nm))
    out["bc"] = equal(V, U) and equal(bc_form(V)[1], Bp)
    Nw, Bw = bw_form(U)
    W = antidiagonal(n)
    out["bw"] = equal(Nw.dot(Bw).dot(W).dot(inverse(Nw)), U) and all(Bw[i, j] == 0 for i in range(n) for j in range(i))
    if n >= 3:
        nu, Nn, M = nmn_form(U)
        E = _e12(n)
        V = (identity(n) + E * nu).dot(Nn).dot(M).dot(inverse(Nn)).dot(identity(n) - E * nu)
        first_col = all(Nn[j, 0] == 0 for j in range(1, n))
        out["nmn"] = equal(V, U) and nmn_pattern_ok(M) and first_col and nu == U[0, n - 1] / U[1, n - 1]
    H = Bp.dot(C)
    Np, Dl, Ms = companion_reduce(H)
    back = inverse(Dl).dot(inverse(Np)).dot(Ms).dot(Np).dot(Dl)
    comp = first_row_companion(charpoly_coeffs(U))
    out["companion"] = equal(back, H) and equal(Ms, comp) and all(Np[i, n - 1] == 0 for i in range(n - 1))
    return out


def check_round_trips(n: int, count: int, rng_seed: int = 0) -> IdentityReport:
    from .double_seed.sampling import sample_point

    rep = IdentityReport("round_trips", n, count)
    fails: dict = {}
    for t in range(count):
        X, Y = sample_point(n, rng_seed * 100000 + t)
        for name, ok in round_trips(Context(X, Y).U).items():
            fails.setdefault(name, [])
            if not ok:
                fails[name].append(t)
    for name, bad in fails.items():
        rep.results.append((name, (), not bad, f"failed at {bad[:5]}" if bad else f"{count} points"))
    return rep


# -- formulas -------------------------------------------------------------------


def tildefy_sign(n: int, k: int, l: int) -> int:
    """Sign of the first line for ``phi-tilde``; ``psi`` carries an extra ``s_kl``."""
    return -1 if (k * (n - k) + (l - 1) * (n - k - l + 1)) % 2 else 1


def tildefy_first(U, Bp, k: int, l: int):
    n = U.shape[0]
    prod = Fraction(1)
    for s in range(1, n - k - l + 2):
        prod *= Bp[s - 1, s - 1] ** (n - k - l - s + 2)
    return prod * det(Bp[n - k - l + 1: n - k, n - l + 1: n])


def tildefy_second(U, Bp, k: int, l: int):
    n = U.shape[0]
    m = n - k - l + 1
    den = Fraction(1)
    for s in range(2, m + 2):
        den *= h_value(Bp, s, s)
    top = h_value(Bp, m + 1, n - l + 2) if l > 1 else Fraction(1)
    return det(U) ** m * top / den


def _psi(U, k, l):
    """``psi_kl(U)`` with the boundary conventions ``psi_{n0} = psi_{n+1,1} = 1`` and ``psi_{0n} = det U``."""
    n = U.shape[0]
    if k >= n and l <= 1 or (k == n and l == 0):
        return Fraction(1)
    if k == 0 and l == n:
        return det(U)
    return psi_value(U, k, l)


class _SignTracker:
    def __init__(self, rep):
        self.rep = rep
        self.state: dict = {}

    def add(self, name, idx, a, b, sign=None):
        key = (name, idx)
        st = self.state.setdefault(key, {"sign": sign, "ok": True, "detail": ""})
        if not st["ok"]:
            return
        if b == 0:
            good = a == 0
            r = None
        else:
            r = a / b
            good = r in (1, -1) and (st["sign"] is None or r == st["sign"])
        if not good:
            st["ok"], st["detail"] = False, f"ratio {a}/{b}"
        elif r is not None and st["sign"] is None:
            st["sign"] = r

    def flush(self):
        for (name, idx), st in self.state.items():
            self.rep.results.append((name, idx, st["ok"], st["detail"] or f"sign {st['sign']}"))


def check_formulas(n: int, points) -> IdentityReport:
    """tildefy, barbeta, diagrI, lastrI, gluing, companion top row, Hessenberg row."""
    rep = IdentityReport("normal_form_formulas", n, len(points))
    tr = _SignTracker(rep)
    for X, Y in points:
        U = Context(X, Y).U
        Nm, Bp = bc_form(U)
        C = cyclic_shift(n)
        for k in range(1, n):
            for l in range(1, n - k + 1):
                t1 = tildefy_first(U, Bp, k, l)
                tr.add("tildefy_phi_tilde", (k, l), phi_tilde(U, k, l), tildefy_sign(n, k, l) * t1, sign=1)
                tr.add("tildefy_psi", (k, l), psi_value(U, k, l),
                       tildefy_sign(n, k, l) * sign_s(n, k, l) * t1, sign=1)
                tr.add("tildefy_second", (k, l), phi_tilde(U, k, l), tildefy_second(U, Bp, k, l))
        for i in range(1, n):
            tr.add("barbeta", (i,), Bp[i - 1, i - 1],
                   _psi(U, n - i, 1) * _psi(U, n - i + 2, 1) / _psi(U, n - i + 1, 1) ** 2)
        if n >= 2:
            tr.add("barbeta_nn", (), Bp[n - 1, n - 1], det(U) * _psi(U, 2, 1) / _psi(U, 1, 1) if n > 2
                   else det(U) / _psi(U, 1, 1))
        if n >= 3:
            sg = -1 if n % 2 else 1
            tr.add("barbeta_n-1,n", (), Bp[n - 2, n - 1], sg * psi_value(U, 1, 2) / psi_value(U, 2, 1), sign=1)
        Bu, Nu = ul_form(U)
        tr.add("glue_component_I", (), Fraction(int(equal(glue_component_I(Bu, Bp.dot(C)), Nm))), Fraction(1), sign=1)
        Nw, Bw = bw_form(U)
        for i in range(1, n + 1):
            den = _psi(U, n - i + 1, i - 1) if i > 1 else Fraction(1)
            num = _psi(U, n - i, i) if i < n else det(U)
            tr.add("diagrI", (i,), Bw[i - 1, i - 1], num / den)
        for l in range(2, n):
            tr.add("lastrI", (l,), Bw[l - 1, n - 1],
                   _psi(U, n - l, l - 1) / (_psi(U, n - 1, 1) * _psi(U, n - l + 1, l - 1)))
        # companion reduction of Bbar_+ C
        H = Bp.dot(C)
        last = Fraction(1) / det(U)
        D = unit_subdiagonal_scaling(H, last)
        Np, Dl, Ms = companion_reduce(H, D)
        for i in range(1, n):
            tr.add("delta", (i,), D[i - 1, i - 1], _psi(U, n - i + 1, 1) / _psi(U, n - i, 1))
        # with c read at (U, 1) the top row is indexed by n - i; at (1, U) by i
        cr = c_coeffs(U, identity(n))
        c1 = c_coeffs(identity(n), U)
        for i in range(1, n + 1):
            tr.add("gamma", (i,), Ms[0, i - 1], (-1) ** (i - 1) * charpoly_sign(n, n - i) * cr[n - i], sign=1)
            tr.add("gamma_1U", (i,), Ms[0, i - 1], (-1) ** (i - 1) * charpoly_sign(n, i) * c1[i], sign=1)
        cp = charpoly_coeffs(U)
        for i in range(1, n + 1):
            tr.add("gamma_charpoly", (i,), Ms[0, i - 1], -cp[i], sign=1)
        # Hessenberg first-row identity on the unit-subdiagonal form
        Hu = D.dot(H).dot(inverse(D))
        if n >= 2:
            row = hessenberg_first_row(Hu)
            ref = first_row_companion(charpoly_coeffs(Hu[1:, 1:]))[0, :] if n > 2 else np.array([Hu[1, 1]], dtype=object)
            N = hessenberg_conjugator(Hu)
            conj_ok = equal(inverse(N).dot(Hu).dot(N), first_row_companion(charpoly_coeffs(Hu)))
            tr.add("hessenberg_row", (), Fraction(int(conj_ok and all(a == b for a, b in zip(row, ref)))),
                   Fraction(1), sign=1)
        # first row from the other rows and the spectrum
        got = first_row_from_spectrum(U[1:, :], charpoly_coeffs(U))
        tr.add("row_from_spectrum", (), Fraction(int(all(a == b for a, b in zip(got, U[0, :])))), Fraction(1), sign=1)
    tr.flush()
    return rep
