"""Exact gradients by forward-mode dual passes.

The gradient follows the trace-form convention: ``grad[i, j]`` is the
derivative with respect to the entry at ``(j, i)``, so that
``d/dt f(A + tB) = trace(grad(f) @ B)``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .dual import Dual, deriv
from .linalg import zeros


def lift(A: np.ndarray) -> np.ndarray:
    out = np.empty(A.shape, dtype=object)
    for idx in np.ndindex(A.shape):
        out[idx] = Dual(A[idx], Fraction(0))
    return out


def _seeded(D: np.ndarray, A: np.ndarray, i: int, j: int) -> np.ndarray:
    out = D.copy()
    out[i, j] = Dual(A[i, j], Fraction(1))
    return out


def gradients(fns, *mats):
    """Gradients of several functions of several matrices.

    ``fns`` is a list of callables ``f(*mats)``; every matrix entry gets one
    dual pass shared by all functions. Returns ``grads[f][m]``, the gradient of
    function ``f`` with respect to matrix ``m``.
    """
    lifted = [lift(A) for A in mats]
    out = [[zeros(*A.shape[::-1]) for A in mats] for _ in fns]
    for m, A in enumerate(mats):
        r, c = A.shape
        for i in range(r):
            for j in range(c):
                args = list(lifted)
                args[m] = _seeded(lifted[m], A, i, j)
                for k, f in enumerate(fns):
                    out[k][m][j, i] = deriv(f(*args))
    return out


def jacobian(fvec, *mats):
    """Like :func:`gradients` for one callable returning a list of values.

    Lets a family share intermediate results within each dual pass.
    """
    lifted = [lift(A) for A in mats]
    out = None
    for m, A in enumerate(mats):
        r, c = A.shape
        for i in range(r):
            for j in range(c):
                args = list(lifted)
                args[m] = _seeded(lifted[m], A, i, j)
                vals = fvec(*args)
                if out is None:
                    out = [[zeros(*B.shape[::-1]) for B in mats] for _ in vals]
                for k, v in enumerate(vals):
                    out[k][m][j, i] = deriv(v)
    return out


def gradient(f, *mats):
    """Gradient of one function; a single array for one matrix argument."""
    g = gradients([f], *mats)[0]
    return g[0] if len(mats) == 1 else tuple(g)
