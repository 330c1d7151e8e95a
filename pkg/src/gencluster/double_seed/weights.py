"""Weights of the family under the left and right torus actions."""

from __future__ import annotations

from fractions import Fraction

from ..exact_core import jacobian
from .functions import Context, canonical, evaluate


def delta(n: int, i: int, j: int) -> tuple:
    """Indicator of positions ``i..j`` (1-based) as a length-``n`` vector."""
    return tuple(1 if i <= p <= j else 0 for p in range(1, n + 1))


def _add(*vs) -> tuple:
    return tuple(sum(x) for x in zip(*vs))


def _scale(c: int, v: tuple) -> tuple:
    return tuple(c * x for x in v)


def toric_weights(n: int, lab: tuple):
    """Closed-form ``(xi_L, xi_R)`` of a labelled function."""
    lab = canonical(n, lab)
    ones = delta(n, 1, n)
    if lab is None:
        return delta(n, 1, 0), delta(n, 1, 0)
    fam = lab[0]
    if fam == "g":
        i, j = lab[1], lab[2]
        return delta(n, j, n + j - i), delta(n, i, n)
    if fam == "h":
        i, j = lab[1], lab[2]
        return delta(n, j, n), delta(n, i, n + i - j)
    if fam == "f":
        k, l = lab[1], lab[2]
        return _add(delta(n, n - k + 1, n), delta(n, n - l + 1, n)), delta(n, n - k - l + 1, n)
    if fam == "phi":
        k, l = lab[1], lab[2]
        m = n - k - l
        left = _add(_scale(m, _add(ones, delta(n, n, n))), delta(n, n - k + 1, n), delta(n, n - l + 1, n))
        return left, _scale(m + 1, ones)
    if fam == "c":
        return ones, ones
    raise KeyError(lab)


def numeric_weights(labels, X, Y) -> dict:
    """Diagonals of ``E_L log f`` and ``E_R log f`` computed from gradients."""

    def fam(A, B):
        ctx = Context(A, B)
        return [evaluate(l, ctx) for l in labels]

    vals = fam(X, Y)
    grads = jacobian(fam, X, Y)
    n = X.shape[0]
    out = {}
    for lab, v, (GX, GY) in zip(labels, vals, grads):
        EL = GX.dot(X) + GY.dot(Y)
        ER = X.dot(GX) + Y.dot(GY)
        out[lab] = (
            tuple(Fraction(EL[i, i]) / v for i in range(n)),
            tuple(Fraction(ER[i, i]) / v for i in range(n)),
        )
    return out


def y_weight(n: int, exps: dict):
    """Weights of a Laurent monomial ``prod x_lab^e``."""
    left = (0,) * n
    right = (0,) * n
    for lab, e in exps.items():
        wl, wr = toric_weights(n, lab)
        left = _add(left, _scale(e, wl))
        right = _add(right, _scale(e, wr))
    return left, right
