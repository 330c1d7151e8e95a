"""Initial seed for the dual group, on the single matrix ``U``.

The quiver is the subquiver of ``Q_n`` on the phi-, f- and diagonal
h-vertices. Vertices keep their ``Q_n`` labels; ``dual_function`` says
which function of ``U`` sits at each of them.
"""

from __future__ import annotations

import numpy as np

from ..exact_core import det, identity
from ..gcs_core import EvaluatedSeed, GeneralizedSeed, make_seed
from .functions import c_coeffs, h_value, psi_value
from .seed import SPECIAL, build_initial_seed


def dual_vertex(lab: tuple) -> bool:
    fam = lab[0]
    return fam in ("phi", "f", "c") or (fam == "h" and lab[1] == lab[2])


def dual_function(n: int, lab: tuple) -> tuple:
    """``(kind, i, j, sign)`` of the function of ``U`` at a ``Q_n`` vertex.

    ``f_kl`` carries ``h_ij(U)`` with ``i = n-k-l+1``, ``j = n-l+1``. This is the
    vertex matching, after the mutation sequence S, the one that holds
    ``det X * h_ij(U)``.
    """
    fam = lab[0]
    if fam == "phi":
        return ("psi", lab[1], lab[2], 1)
    if fam == "f":
        k, l = lab[1], lab[2]
        i, j = n - k - l + 1, n - l + 1
        return ("h", i, j, -1 if (n - i) * (j - i) % 2 else 1)
    if fam == "h":
        return ("h", lab[1], lab[2], 1)
    if fam == "c":
        return ("c", lab[1], None, 1)
    raise KeyError(lab)


def build_dual_seed(n: int) -> GeneralizedSeed:
    full = build_initial_seed(n)
    keep = [l for l in full.labels if dual_vertex(l)]
    mut = [l for l in keep if l[0] in ("phi", "f")]
    fro = [l for l in keep if l not in mut]
    labels = mut + fro
    cols = [full.index(l) for l in labels]
    rows = [full.index(l) for l in mut]
    # arrow counts, rescaled by the multiplicity on columns that stay mutable
    bh = full.b_hat()
    d = [full.d[r] for r in rows]
    N = len(mut)
    b = np.array([[bh[r, c] * (d[a] if q < N else 1) for q, c in enumerate(cols)] for a, r in enumerate(rows)],
                 dtype=np.int64)
    strings = [full.strings[r] for r in rows]
    return make_seed(labels, len(mut), b, d, strings)


def evaluate_dual(n: int, labels, U) -> dict:
    """Values of the dual family at ``U``; works for Dual entries."""
    out = {}
    c = None
    for lab in labels:
        kind, i, j, sg = dual_function(n, lab)
        if kind == "psi":
            out[lab] = psi_value(U, i, j)
        elif kind == "h":
            out[lab] = sg * h_value(U, i, j) if i > 1 else det(U)
        else:
            if c is None:
                c = c_coeffs(identity(n), U)
            out[lab] = c[i]
    return out


def evaluate_dual_seed(seed: GeneralizedSeed, U) -> EvaluatedSeed:
    return EvaluatedSeed(seed, evaluate_dual(U.shape[0], seed.labels, U))


__all__ = ["SPECIAL", "build_dual_seed", "dual_function", "dual_vertex", "evaluate_dual", "evaluate_dual_seed"]
