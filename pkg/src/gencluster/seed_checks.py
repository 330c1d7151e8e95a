"""Structural checks on the initial seed: rank, the isolated block, torus weights."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .double_seed.functions import Context, evaluate, family_labels
from .double_seed.seed import SPECIAL, build_initial_seed
from .double_seed.weights import toric_weights, y_weight
from .exact_core import rank
from .gcs_core import y_exponents
from .identities import IdentityReport


def expected_rank(n: int) -> int:
    return 2 * n * n - 3 * n + 1


def b_tilde_one(seed) -> np.ndarray:
    """Exponents of the isolated variables in the special string, one row per inner entry."""
    k = seed.index(SPECIAL)
    iso = [l for l in seed.stable if seed.is_isolated(l)]
    inner = seed.strings[k][1:-1]
    out = np.zeros((len(inner), len(iso)), dtype=np.int64)
    for r, e in enumerate(inner):
        if e in iso:
            out[r, iso.index(e)] += 1
    return out


def check_rank_and_isolated(n: int, seed=None) -> IdentityReport:
    seed = seed or build_initial_seed(n)
    rep = IdentityReport("rank_and_isolated", n, 0)
    r = rank(seed.b)
    rep.results.append(("rank", (), r == expected_rank(n) == seed.n_mutable, f"rank {r}"))
    B1 = b_tilde_one(seed)
    ok = B1.shape == (n - 1, n - 1) and (B1 == np.eye(n - 1, dtype=np.int64)).all()
    rep.results.append(("b_tilde_one", (), bool(ok), f"shape {B1.shape}"))
    return rep


def check_toric_annihilation(n: int, seed=None) -> IdentityReport:
    """Left and right weights of every y-variable vanish."""
    seed = seed or build_initial_seed(n)
    rep = IdentityReport("toric_annihilation", n, 0)
    zero = (0,) * n
    for v in seed.mutable:
        wl, wr = y_weight(n, y_exponents(seed, v))
        rep.results.append(("y_weight", v, wl == zero and wr == zero, f"{wl} {wr}"))
    return rep


def _diag(rng, n):
    return [Fraction(rng.choice([-1, 1]) * rng.randint(2, 9), rng.randint(1, 5)) for _ in range(n)]


def _act(t1, A, t2):
    n = A.shape[0]
    out = A.copy()
    for i in range(n):
        for j in range(n):
            out[i, j] = t1[i] * A[i, j] * t2[j]
    return out


def p_hat(n: int, ctx: Context, r: int):
    c, g, h = ctx.c_values[r], evaluate(("g", 1, 1), ctx), evaluate(("h", 1, 1), ctx)
    return c ** n * g ** (r - n) * h ** (-r)


def check_torus_action(n: int, points, rng_seed: int = 0, labels=None, weights=toric_weights) -> IdentityReport:
    """Predicted weights against direct evaluation at ``(T1 X T2, T1 Y T2)``; also ``p-hat`` invariance.

    ``xi_L`` is the weight of the Euler field ``grad_X X + grad_Y Y``, which
    scales columns, so it pairs with ``T2``; ``xi_R`` pairs with ``T1``.
    """
    rng = random.Random(rng_seed)
    labels = labels or [l for l in family_labels(n) if l[0] != "c"]
    rep = IdentityReport("torus_action", n, len(points))
    bad: dict = {}
    for X, Y in points:
        t1, t2 = _diag(rng, n), _diag(rng, n)
        c0, c1 = Context(X, Y), Context(_act(t1, X, t2), _act(t1, Y, t2))
        for lab in labels:
            wl, wr = weights(n, lab)
            pred = Fraction(1)
            for i in range(n):
                pred *= t1[i] ** wr[i] * t2[i] ** wl[i]
            if evaluate(lab, c1) != pred * evaluate(lab, c0):
                bad.setdefault(("weights", lab), 0)
        for r in range(1, n):
            if p_hat(n, c1, r) != p_hat(n, c0, r):
                bad.setdefault(("p_hat", (r,)), 0)
    for lab in labels:
        rep.results.append(("weights", lab, ("weights", lab) not in bad, ""))
    for r in range(1, n):
        rep.results.append(("p_hat", (r,), ("p_hat", (r,)) not in bad, ""))
    return rep
