"""Deterministic generic sample points."""

from __future__ import annotations

import random
from fractions import Fraction

from ..exact_core import GenericityError, antidiagonal, det, mat
from .functions import Context, evaluate_family, family_labels


def random_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9):
    return mat([[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])


def trailing_minors(A) -> list:
    n = A.shape[0]
    return [det(A[n - k:, n - k:]) for k in range(1, n + 1)]


def leading_minors(A) -> list:
    n = A.shape[0]
    return [det(A[:k, :k]) for k in range(1, n + 1)]


def is_generic(X, Y) -> bool:
    """Every family function, the c's, and the factorization minors are nonzero."""
    try:
        if det(X) == 0 or det(Y) == 0:
            return False
        if any(m == 0 for m in trailing_minors(X) + trailing_minors(Y)):
            return False
        ctx = Context(X, Y)
        vals = evaluate_family(ctx, family_labels(X.shape[0]))
        if any(v == 0 for v in vals.values()):
            return False
        U = ctx.U
        W = antidiagonal(X.shape[0])
        if any(m == 0 for m in leading_minors(W.dot(U)) + trailing_minors(U) + leading_minors(U)):
            return False
        from ..normal_forms import bc_form, bw_form, nmn_form
        bc_form(U)
        bw_form(U)
        if X.shape[0] >= 3:
            nmn_form(U)
        return True
    except (GenericityError, ZeroDivisionError):
        return False


def sample_point(n: int, rng_seed: int = 0, lo: int = -9, hi: int = 9, max_tries: int = 1000):
    """First generic integer point drawn from a seeded generator."""
    rng = random.Random(f"gencluster:{n}:{rng_seed}")
    for _ in range(max_tries):
        X = random_matrix(rng, n, lo, hi)
        Y = random_matrix(rng, n, lo, hi)
        if is_generic(X, Y):
            return X, Y
    raise GenericityError(f"no generic point found for n={n} after {max_tries} draws")


def sample_points(n: int, count: int, rng_seed: int = 0):
    return [sample_point(n, rng_seed * 1000 + t) for t in range(count)]
