"""Initial generalized seed on the double of GL_n."""

from __future__ import annotations

import numpy as np

from ..gcs_core import EvaluatedSeed, GeneralizedSeed, make_seed
from .functions import Context, check_nonzero, evaluate_family, family_labels
from .quiver import is_frozen, quiver_arrows

SPECIAL = ("phi", 1, 1)


def vertex_order(n: int) -> tuple:
    """Mutable vertices first, then frozen ones, each in family order."""
    labs = family_labels(n)
    mut = [l for l in labs if not is_frozen(l)]
    fro = [l for l in labs if is_frozen(l)]
    return tuple(mut + fro), len(mut)


def build_initial_seed(n: int) -> GeneralizedSeed:
    labels, N = vertex_order(n)
    pos = {l: i for i, l in enumerate(labels)}
    d = [n if l == SPECIAL else 1 for l in labels[:N]]
    b = np.zeros((N, len(labels)), dtype=np.int64)
    for (s, t), m in quiver_arrows(n).items():
        for src, dst, sgn in ((s, t, 1), (t, s, -1)):
            i = pos[src]
            if i >= N:
                continue
            j = pos[dst]
            scale = d[i] if j < N else 1
            b[i, j] += sgn * m * scale
    strings = []
    for l in labels[:N]:
        if l == SPECIAL:
            strings.append((1,) + tuple(("c", r) for r in range(1, n)) + (1,))
        else:
            strings.append(None)
    return make_seed(labels, N, b, d, strings)


def evaluate_seed(seed: GeneralizedSeed, X, Y, require_nonzero: bool = True) -> EvaluatedSeed:
    ctx = Context(X, Y)
    vals = evaluate_family(ctx, seed.labels)
    if require_nonzero:
        check_nonzero(vals)
    return EvaluatedSeed(seed, vals)
