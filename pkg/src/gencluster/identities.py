"""Determinantal identities behind the exchange relations of the initial seed.

Each relation is a pair of callables ``lhs(ctx)``, ``rhs(ctx)`` on a
:class:`~gencluster.double_seed.functions.Context`. Variant functions are
described by column substitutions in the base matrices ``Phi``, ``F``,
``G`` and ``H``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .double_seed.functions import (
    Context,
    F_matrix,
    G_matrix,
    Phi_matrix,
    evaluate,
    sign_s,
)
from .exact_core import cols, det, hstack, identity, rows


# -- variant functions -------------------------------------------------------


def _replace(A: np.ndarray, pos: int, column: np.ndarray) -> np.ndarray:
    """Copy of ``A`` with column ``pos`` (1-based) replaced."""
    B = A.copy()
    B[:, pos - 1] = column.reshape(-1)
    return B


def _col(A: np.ndarray, j: int) -> np.ndarray:
    return A[:, j - 1]


def t_(n: int, s: int) -> int:
    return n - s + 1


def phi(ctx: Context, k: int, l: int):
    """``phi_kl`` for ``k >= 0``; ``k = 0`` uses the extended matrix ``Phi_0l``."""
    n = ctx.n
    return sign_s(n, k, l) * ctx.detX ** t_(n, k + l) * det(Phi_matrix(ctx.U, k, l, ctx.upow))


def fn(ctx: Context, lab: tuple):
    """A family member by label, with boundary identifications resolved."""
    if lab[0] == "phi" and lab[1] == 0:
        return phi(ctx, 0, lab[2])
    return evaluate(lab, ctx)


def phi_star(ctx: Context, p: int, l: int):
    """Column ``U^[n-l+1]`` of ``Phi_pl`` replaced by ``U^[n-l]``."""
    n = ctx.n
    P = _replace(Phi_matrix(ctx.U, p, l, ctx.upow), p + 1, _col(ctx.U, n - l))
    return -sign_s(n, p, l) * det(P) * ctx.detX ** t_(n, p + l)


def phi_2star(ctx: Context, p: int, q: int):
    """Last column of ``Phi_pq`` dropped and ``(U^2)^[n-1]`` inserted at ``p+q+1``."""
    n = ctx.n
    P = Phi_matrix(ctx.U, p, q, ctx.upow)[:, :-1]
    P = np.insert(P, p + q, _col(ctx.upow(2), n - 1), axis=1)
    return sign_s(n, q, p + 2) * det(P) * ctx.detX ** (t_(n, p + q) - 1)


def phi_circ(ctx: Context, p: int, q: int):
    """Column ``I^[n-p+1]`` of ``Phi_pq`` replaced by ``I^[n-p]``."""
    n = ctx.n
    P = _replace(Phi_matrix(ctx.U, p, q, ctx.upow), 1, _col(identity(n), n - p))
    return -sign_s(n, q - 1, p) * det(P) * ctx.detX ** t_(n, p + q)


def f_diamond_matrix(ctx: Context, k: int) -> np.ndarray:
    n = ctx.n
    return hstack(cols(identity(n), 1), cols(ctx.X, n - k + 1, n), cols(ctx.Y, k + 2, n))


def phi_diamond(ctx: Context, k: int):
    """``X Phi_{k,n-k-1}`` with its column ``X^[n-k+1]`` replaced by ``I^[1]``."""
    n = ctx.n
    P = ctx.X.dot(Phi_matrix(ctx.U, k, n - k - 1, ctx.upow))
    P = _replace(P, 1, _col(identity(n), 1))
    return sign_s(n, k, n - k - 1) * det(P) * ctx.detX


def phi_square(ctx: Context):
    """First column of ``Phi_{2,n-2}`` replaced by ``U^[1]``."""
    n = ctx.n
    P = _replace(Phi_matrix(ctx.U, 2, n - 2, ctx.upow), 1, _col(ctx.U, 1))
    return -sign_s(n, 2, n - 2) * det(P) * ctx.detX


def f_square(ctx: Context):
    """First column of ``F^diamond_{n-2,1}`` replaced by ``X^[1]``."""
    F = _replace(f_diamond_matrix(ctx, ctx.n - 2), 1, _col(ctx.X, 1))
    return det(F)


def f_star(ctx: Context, p: int, q: int):
    n = ctx.n
    M = hstack(cols(identity(n), n - p - q + 1), cols(ctx.X, n - p + 1, n), cols(ctx.Y, n - q + 1, n))
    return det(rows(M, n - p - q, n))


def h_star(ctx: Context, i: int):
    n = ctx.n
    M = hstack(cols(ctx.X, n), cols(ctx.Y, i + 1, n), cols(identity(n), n))
    return det(rows(M, i - 1, n))


def h_star_short(ctx: Context, i: int):
    n = ctx.n
    M = hstack(cols(ctx.X, n), cols(ctx.Y, i + 1, n))
    return det(rows(M, i - 1, n - 1))


def f_circ(ctx: Context, i: int):
    """``F_{n-i+1,1}`` with ``X^[i]`` replaced by ``X^[i-1]``."""
    n = ctx.n
    F = F_matrix(ctx.X, ctx.Y, n - i + 1, 1)
    F = _replace(F, 1, _col(rows(ctx.X, i - 1, n), i - 1))
    return det(F)


def g_circ(ctx: Context, i: int, j: int):
    """``G_ij`` with its first column ``X^[j]`` replaced by ``X^[j-1]``."""
    n = ctx.n
    G = G_matrix(ctx.X, i, j)
    G = _replace(G, 1, _col(rows(ctx.X, i, n), j - 1))
    return det(G)


# -- relations ---------------------------------------------------------------


@dataclass
class Relation:
    name: str
    index: tuple
    lhs: object
    rhs: object
    mode: str = "exact"  # or "sign": lhs = +-rhs with a point-independent sign


def shpl_relations(n: int):
    """Short Pluecker relations among phi and phi*; ``p = 1`` uses ``Phi_0l``."""
    for p in range(1, n + 1):
        for l in range(2, n - p + 1):
            yield Relation(
                "shpl", (p, l),
                lambda c, p=p, l=l: phi(c, p, l) * phi_star(c, p - 1, l),
                lambda c, p=p, l=l: phi_star(c, p, l) * phi(c, p - 1, l) + phi(c, p, l - 1) * phi(c, p - 1, l + 1),
            )


def fyklex_relations(n: int):
    for k in range(2, n):
        for l in range(2, n - k):
            yield Relation(
                "fyklex", (k, l),
                lambda c, k=k, l=l: phi(c, k, l) * (
                    phi(c, k + 1, l) * phi_star(c, k - 1, l) - phi(c, k - 1, l) * phi_star(c, k + 1, l)),
                lambda c, k=k, l=l: phi(c, k + 1, l) * phi(c, k, l - 1) * phi(c, k - 1, l + 1)
                + phi(c, k + 1, l - 1) * phi(c, k, l + 1) * phi(c, k - 1, l),
            )


def k1neigh_relations(n: int):
    # no (-1)^n factor with the sign s_{q,p+2} carried by phi**
    for k in range(2, n - 1):
        yield Relation(
            "k1neigh", (k,),
            lambda c, k=k: phi(c, k, 1) * phi_2star(c, 1, k - 1),
            lambda c, k=k: phi(c, k - 1, 2) * phi(c, 1, k) + phi(c, k, 2) * phi(c, 1, k - 1),
        )


def fy1lex_relations(n: int):
    for l in range(2, n - 1):
        yield Relation(
            "fy1lex", (l,),
            lambda c, l=l: phi(c, 1, l) * (phi(c, 2, l) * phi_circ(c, l, 1) - phi(c, l, 1) * phi_star(c, 2, l)),
            lambda c, l=l: phi(c, 2, l) * phi(c, 1, l - 1) * phi(c, l + 1, 1)
            + phi(c, 2, l - 1) * phi(c, 1, l + 1) * phi(c, l, 1),
        )


def diamond_relations(n: int):
    for k in range(2, n - 1):
        yield Relation(
            "phi_diamond", (k,),
            lambda c, k=k: phi(c, k, n - k) * phi_diamond(c, k),
            lambda c, k=k: phi(c, k - 1, n - k) * fn(c, ("f", k, n - k - 1))
            + phi(c, k, n - k - 1) * fn(c, ("f", k - 1, n - k)),
        )
    if n >= 3:
        yield Relation(
            "phi_diamond_1", (1,),
            lambda c: phi(c, 1, n - 1) * phi_diamond(c, 1),
            lambda c: fn(c, ("h", 1, 1)) * phi(c, n - 1, 1) * fn(c, ("f", 1, n - 2))
            + phi(c, 1, n - 2) * fn(c, ("h", 2, 2)),
        )


def f_diamond_relations(n: int):
    """``det F^diamond_{k,n-k-1}`` agrees with ``f_{k,n-k-1}``."""
    for k in range(0, n - 1):
        yield Relation(
            "f_diamond", (k,),
            lambda c, k=k: det(f_diamond_matrix(c, k)),
            lambda c, k=k: fn(c, ("f", k, n - k - 1)),
        )


def reg6_relations(n: int):
    if n >= 3:
        yield Relation(
            "reg6", (),
            lambda c: phi(c, n - 1, 1) * phi_square(c),
            lambda c: phi(c, 1, n - 2) + phi(c, 1, n - 1) * f_square(c),
        )


def f_relations(n: int):
    for p in range(1, n):
        for q in range(1, n - 1 - p):
            yield Relation(
                "f_short", (p, q),
                lambda c, p=p, q=q: fn(c, ("f", p, q)) * f_star(c, p - 1, q + 1),
                lambda c, p=p, q=q: fn(c, ("f", p - 1, q + 1)) * f_star(c, p, q)
                + fn(c, ("f", p - 1, q)) * fn(c, ("f", p, q + 1)),
            )


def f_exchange_relations(n: int):
    for i in range(1, n):
        for j in range(1, n - 1 - i):
            yield Relation(
                "f_exchange", (i, j),
                lambda c, i=i, j=j: fn(c, ("f", i, j)) * (
                    fn(c, ("f", i + 1, j - 1)) * f_star(c, i - 1, j + 1)
                    - fn(c, ("f", i - 1, j + 1)) * f_star(c, i + 1, j - 1)),
                lambda c, i=i, j=j: fn(c, ("f", i + 1, j - 1)) * fn(c, ("f", i - 1, j)) * fn(c, ("f", i, j + 1))
                + fn(c, ("f", i, j - 1)) * fn(c, ("f", i + 1, j)) * fn(c, ("f", i - 1, j + 1)),
            )


def hii_relations(n: int):
    for i in range(2, n + 1):
        yield Relation(
            "hii", (i,),
            lambda c, i=i: fn(c, ("h", i, i)) * h_star(c, i),
            lambda c, i=i: fn(c, ("f", 1, n - i)) * fn(c, ("h", i - 1, i))
            + fn(c, ("f", 1, n - i + 1)) * fn(c, ("h", i, i + 1)),
        )
        yield Relation("hii_short", (i,), lambda c, i=i: h_star(c, i), lambda c, i=i: h_star_short(c, i))


def pluone_relations(n: int):
    for i in range(2, n + 1):
        yield Relation(
            "pluone", (i,),
            lambda c, i=i: fn(c, ("g", i, i)) * f_circ(c, i),
            lambda c, i=i: fn(c, ("f", n - i, 1)) * fn(c, ("g", i - 1, i - 1))
            + det(F_matrix(c.X, c.Y, n - i + 1, 1)) * g_circ(c, i, i),
        )


def plutwo_relations(n: int):
    for i in range(2, n):
        yield Relation(
            "plutwo", (i,),
            lambda c, i=i: fn(c, ("g", i + 1, i)) * g_circ(c, i, i),
            lambda c, i=i: fn(c, ("g", i, i - 1)) * fn(c, ("g", i + 1, i + 1))
            + fn(c, ("g", i, i)) * g_circ(c, i + 1, i),
        )


def g_exchange_relations(n: int):
    for i in range(2, n):
        yield Relation(
            "g_exchange", (i,),
            lambda c, i=i: fn(c, ("g", i, i)) * (
                fn(c, ("g", i + 1, i)) * f_circ(c, i) - g_circ(c, i + 1, i) * fn(c, ("f", n - i + 1, 1))),
            lambda c, i=i: fn(c, ("f", n - i, 1)) * fn(c, ("g", i - 1, i - 1)) * fn(c, ("g", i + 1, i))
            + fn(c, ("f", n - i + 1, 1)) * fn(c, ("g", i, i - 1)) * fn(c, ("g", i + 1, i + 1)),
        )


PLUCKER_GROUPS = {
    "shpl": shpl_relations,
    "fyklex": fyklex_relations,
    "k1neigh": k1neigh_relations,
    "fy1lex": fy1lex_relations,
    "phi_diamond": diamond_relations,
    "f_diamond": f_diamond_relations,
    "reg6": reg6_relations,
    "f_short": f_relations,
    "f_exchange": f_exchange_relations,
    "hii": hii_relations,
    "pluone": pluone_relations,
    "plutwo": plutwo_relations,
    "g_exchange": g_exchange_relations,
}


def plucker_relations(n: int, names=None) -> list:
    out = []
    for name, gen in PLUCKER_GROUPS.items():
        if names is None or name in names:
            out.extend(gen(n))
    return out


# -- reports -----------------------------------------------------------------


@dataclass
class IdentityReport:
    """Per-relation verdicts over a set of points."""

    name: str
    n: int
    points: int
    results: list = field(default_factory=list)  # (relation, index, passed, detail)

    @property
    def passed(self) -> bool:
        return all(r[2] for r in self.results)

    @property
    def first_failure(self):
        for r in self.results:
            if not r[2]:
                return r
        return None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "points": self.points,
            "passed": self.passed,
            "results": [
                {"relation": r[0], "index": list(r[1]), "passed": r[2], "detail": str(r[3])}
                for r in self.results
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def check_relations(name: str, n: int, relations, points) -> IdentityReport:
    ctxs = [Context(X, Y) for X, Y in points]
    rep = IdentityReport(name, n, len(ctxs))
    for rel in relations:
        ok, detail, sign = True, "", None
        for t, c in enumerate(ctxs):
            a, b = rel.lhs(c), rel.rhs(c)
            if rel.mode == "exact":
                if a != b:
                    ok, detail = False, f"point {t}: {a} != {b}"
                    break
            else:
                if b == 0 or a == 0:
                    good = a == b
                    s = sign
                else:
                    s = a / b
                    good = s in (1, -1) and (sign is None or s == sign)
                if not good:
                    ok, detail = False, f"point {t}: ratio {a}/{b}"
                    break
                sign = s if sign is None else sign
        if ok and rel.mode == "sign":
            detail = f"sign {sign}"
        rep.results.append((rel.name, rel.index, ok, detail))
    return rep


def check_plucker_suite(n: int, points, names=None) -> IdentityReport:
    return check_relations("plucker", n, plucker_relations(n, names), points)


# -- exchange values against the relations ------------------------------------


def mutation_partners(n: int) -> dict:
    """Closed forms for the value replacing each nonstandard mutable vertex.

    Keys are labels of the initial seed, values are callables on a context;
    each is compared with the exchange value up to a point-independent sign.
    ``phi_{n-1,1}`` is absent: the reg6 variant does not match its exchange
    value in the quiver, so it is checked only as a standalone identity.
    """
    out = {}
    for k in range(2, n):
        for l in range(2, n - k):
            out[("phi", k, l)] = lambda c, k=k, l=l: (
                phi(c, k + 1, l) * phi_star(c, k - 1, l) - phi(c, k - 1, l) * phi_star(c, k + 1, l))
    for k in range(2, n - 1):
        out[("phi", k, 1)] = lambda c, k=k: phi_2star(c, 1, k - 1)
    for l in range(2, n - 1):
        out[("phi", 1, l)] = lambda c, l=l: phi(c, 2, l) * phi_circ(c, l, 1) - phi(c, l, 1) * phi_star(c, 2, l)
    for k in range(1, n - 1):
        out[("phi", k, n - k)] = lambda c, k=k: phi_diamond(c, k)
    for i in range(1, n):
        for j in range(1, n - i):
            out[("f", i, j)] = lambda c, i=i, j=j: (
                fn(c, ("f", i + 1, j - 1)) * f_star(c, i - 1, j + 1)
                - fn(c, ("f", i - 1, j + 1)) * f_star(c, i + 1, j - 1))
    for i in range(2, n + 1):
        out[("h", i, i)] = lambda c, i=i: h_star(c, i)
    for i in range(2, n):
        out[("g", i, i)] = lambda c, i=i: (
            fn(c, ("g", i + 1, i)) * f_circ(c, i) - g_circ(c, i + 1, i) * fn(c, ("f", n - i + 1, 1)))
    if n >= 2:
        out[("g", n, n)] = lambda c: f_circ(c, n)
    return out


def check_exchange_partners(n: int, points) -> IdentityReport:
    """Exchange values of the initial seed against :func:`mutation_partners`."""
    from .double_seed.seed import build_initial_seed, evaluate_seed
    from .gcs_core import exchange_value

    seed = build_initial_seed(n)
    rels = []
    for lab, partner in mutation_partners(n).items():
        if lab not in seed.mutable:
            continue

        def lhs(c, lab=lab):
            es = evaluate_seed(seed, c.X, c.Y)
            return exchange_value(seed, es.values, lab)

        rels.append(Relation("exchange_" + lab[0], lab[1:], lhs, partner, "sign"))
    return check_relations("exchange_partners", n, rels, points)


# -- the generalized exchange at phi_11 ---------------------------------------


def phi11_terms(ctx: Context):
    """``(phi_12, phi_21)`` entering the phi_11 relation.

    For ``n = 2`` these are ``y_22`` and ``x_22``, the values that make the
    printed two-by-two relation hold.
    """
    if ctx.n == 2:
        return ctx.Y[1, 1], ctx.X[1, 1]
    return phi(ctx, 1, 2), phi(ctx, 2, 1)


def phi11_lhs(ctx: Context):
    """``det((-1)^(n-1) phi_12 X + phi_21 Y)``."""
    n = ctx.n
    a, b = phi11_terms(ctx)
    a = a if n % 2 else -a
    return det(ctx.X * a + ctx.Y * b)


def phi11_rhs(ctx: Context):
    """``sum_r c_r phi_21^r phi_12^(n-r)``."""
    n = ctx.n
    a, b = phi11_terms(ctx)
    c = ctx.c_values
    return sum((c[r] * b ** r * a ** (n - r) for r in range(n + 1)), Fraction(0))


def check_phi11_exchange(n: int, points) -> IdentityReport:
    """The phi_11 relation at points, plus the seed exchange value at phi_11.

    Symbolic divisibility is done separately by :func:`phi11_symbolic`.
    """
    from .double_seed.seed import SPECIAL, build_initial_seed, evaluate_seed
    from .gcs_core import exchange_value

    seed = build_initial_seed(n)

    def times_phi11(c):
        es = evaluate_seed(seed, c.X, c.Y)
        return es.values[SPECIAL] * exchange_value(seed, es.values, SPECIAL)

    rels = [
        Relation("phi11_expansion", (), phi11_lhs, phi11_rhs),
        Relation("phi11_seed", (), times_phi11, phi11_rhs if n > 2 else _n2_seed_rhs),
    ]
    return check_relations("phi11_exchange", n, rels, points)


def _n2_seed_rhs(c: Context):
    # the family at n = 2 has phi_12 = h_22 and phi_21 = g_22 up to sign
    g22, h22 = fn(c, ("g", 2, 2)), fn(c, ("h", 2, 2))
    cv = c.c_values
    return sum((cv[r] * g22 ** r * h22 ** (2 - r) for r in range(3)), Fraction(0))


# -- symbolic form -------------------------------------------------------------


def symbolic_matrices(n: int):
    """Generic ``X`` and ``Y`` over a polynomial ring in ``2 n^2`` variables."""
    from .exact_core import Ring

    names = [f"x{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    names += [f"y{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    R = Ring(names)
    g = R.gens()
    X = np.empty((n, n), dtype=object)
    Y = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            X[i, j] = g[i * n + j]
            Y[i, j] = g[n * n + i * n + j]
    return R, X, Y


def adjugate(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(A, j, axis=0), i, axis=1)
            v = det(minor)
            out[i, j] = -v if (i + j) % 2 else v
    return out


def phi_symbolic(X, Y, k: int, l: int, d=None, V=None):
    """``phi_kl`` as a polynomial, via ``U = adj(X) Y / det X``."""
    from .exact_core import poly_divide_exact

    n = X.shape[0]
    d = det(X) if d is None else d
    V = adj_times(X, Y) if V is None else V
    m = n - k - l + 1
    parts = []
    for j in range(n - k + 1, n + 1):
        e = np.empty((n, 1), dtype=object)
        for i in range(n):
            e[i, 0] = d.ring.const(1 if i == j - 1 else 0)
        parts.append(e)
    parts.append(V[:, n - l:])
    w = V[:, n - 1:]
    for _ in range(2, m + 1):
        w = V.dot(w)
        parts.append(w)
    D = det(np.hstack(parts))
    E = l + sum(range(2, m + 1)) - m
    for _ in range(E):
        D = poly_divide_exact(D, d)
    return D * sign_s(n, k, l)


def adj_times(X, Y):
    return adjugate(X).dot(Y)


def phi11_symbolic(n: int) -> dict:
    """Divide the phi_11 relation by ``phi_11`` over the polynomial ring.

    Returns the quotient and the check that it matches the symbolic seed
    exchange value. Raises :class:`PolyDivisionError` on a nonzero remainder.
    """
    from .exact_core import poly_divide_exact

    R, X, Y = symbolic_matrices(n)
    d = det(X)
    V = adj_times(X, Y)
    p11 = phi_symbolic(X, Y, 1, 1, d, V)
    if n == 2:
        a, b = Y[1, 1], X[1, 1]
    else:
        a, b = phi_symbolic(X, Y, 1, 2, d, V), phi_symbolic(X, Y, 2, 1, d, V)
    if n % 2 == 0:
        a = -a
    lhs = det(X * a + Y * b)
    q = poly_divide_exact(lhs, p11)
    out = {"phi11": p11, "quotient": q, "terms": len(q.terms)}
    if n == 2:
        out["printed"] = det(np.array([[Y[1, 0], Y[1, 1]], [X[1, 0], X[1, 1]]], dtype=object))
        out["matches_printed"] = q == out["printed"]
    return out


def psi_bar(X: np.ndarray, k: int, l: int):
    """``det[(X^(m))^[n-k+1,n]  (X^(m-1))^[n-l+1,n]  (X^(m-2))^[n] ... I^[n]]``, ``m = n-k-l+1``."""
    n = X.shape[0]
    m = n - k - l + 1
    pw = [identity(n)]
    for _ in range(m):
        pw.append(pw[-1].dot(X))
    parts = [cols(pw[m], n - k + 1, n), cols(pw[m - 1], n - l + 1, n)]
    for p in range(m - 2, -1, -1):
        parts.append(cols(pw[p], n))
    return det(hstack(*parts))


# -- invariance under triangular actions --------------------------------------


def random_unipotent(rng, n: int, upper: bool, lo: int = -5, hi: int = 5) -> np.ndarray:
    A = identity(n)
    for i in range(n):
        for j in range(n):
            if (i < j and upper) or (i > j and not upper):
                A[i, j] = Fraction(rng.randint(lo, hi))
    return A


def check_invariance(n: int, points, rng_seed: int = 0) -> IdentityReport:
    """The six invariance lines, with fresh random unipotent factors per point."""
    import random

    from .double_seed.functions import g_value, h_value

    rng = random.Random(f"invariance:{n}:{rng_seed}")
    moved = []
    for X, Y in points:
        Np = random_unipotent(rng, n, True)
        Nm = random_unipotent(rng, n, False)
        Nm2 = random_unipotent(rng, n, False)
        while True:
            A = np.array([[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)], dtype=object)
            if det(A) != 0:
                break
        moved.append((X, Y, Np, Nm, Nm2, A))
    rels = []
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            rels.append(Relation("g_left", (i, j), lambda c, i=i, j=j: g_value(c.m[2].dot(c.X), i, j),
                                 lambda c, i=i, j=j: g_value(c.X, i, j)))
        rels.append(Relation("g_diag", (i,), lambda c, i=i: g_value(c.m[2].dot(c.X).dot(c.m[3]), i, i),
                             lambda c, i=i: g_value(c.X, i, i)))
        for j in range(i, n + 1):
            rels.append(Relation("h_right", (i, j), lambda c, i=i, j=j: h_value(c.Y.dot(c.m[3]), i, j),
                                 lambda c, i=i, j=j: h_value(c.Y, i, j)))
        rels.append(Relation("h_diag", (i,), lambda c, i=i: h_value(c.m[2].dot(c.Y).dot(c.m[3]), i, i),
                             lambda c, i=i: h_value(c.Y, i, i)))
    for k in range(1, n):
        for l in range(1, n - k + 1):
            rels.append(Relation(
                "f_two_sided", (k, l),
                lambda c, k=k, l=l: det(F_matrix(c.m[2].dot(c.X).dot(c.m[3]), c.m[2].dot(c.Y).dot(c.m[4]), k, l)),
                lambda c, k=k, l=l: det(F_matrix(c.X, c.Y, k, l))))
            rels.append(Relation(
                "phi_tilde", (k, l),
                lambda c, k=k, l=l: _phi_tilde_at(c.m[5].dot(c.X).dot(c.m[3]), c.m[5].dot(c.Y).dot(c.m[3]), k, l),
                lambda c, k=k, l=l: det(Phi_matrix(c.U, k, l, c.upow))))
    ctxs = []
    for X, Y, *rest in moved:
        c = Context(X, Y)
        c.m = (X, Y) + tuple(rest)
        ctxs.append(c)
    return _check_ctxs("invariance", n, rels, ctxs)


def _phi_tilde_at(X, Y, k, l):
    c = Context(X, Y)
    return det(Phi_matrix(c.U, k, l, c.upow))


def _check_ctxs(name, n, relations, ctxs) -> IdentityReport:
    rep = IdentityReport(name, n, len(ctxs))
    for rel in relations:
        ok, detail = True, ""
        for t, c in enumerate(ctxs):
            a, b = rel.lhs(c), rel.rhs(c)
            if a != b:
                ok, detail = False, f"point {t}: {a} != {b}"
                break
        rep.results.append((rel.name, rel.index, ok, detail))
    return rep


def check_canonical_forms(n: int, points) -> IdentityReport:
    """Values of g, h, f through the Gauss factors, including ``Z = (Y_>0)^-1 X_>=0``."""
    from .double_seed.functions import g_value, h_value
    from .exact_core import inverse
    from .normal_forms import gauss

    rels = []
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            rels.append(Relation("g_leq0", (i, j), lambda c, i=i, j=j: g_value(c.gx[1].dot(c.gx[2]), i, j),
                                 lambda c, i=i, j=j: g_value(c.X, i, j)))
        for j in range(i, n + 1):
            rels.append(Relation("h_geq0", (i, j), lambda c, i=i, j=j: h_value(c.gy[0].dot(c.gy[1]), i, j),
                                 lambda c, i=i, j=j: h_value(c.Y, i, j)))
    for k in range(1, n):
        for l in range(1, n - k + 1):
            rels.append(Relation("f_via_Z", (k, l), lambda c, k=k, l=l: det(F_matrix(c.Z, c.gy[1], k, l)),
                                 lambda c, k=k, l=l: det(F_matrix(c.X, c.Y, k, l))))
            rels.append(Relation(
                "f_product", (k, l),
                lambda c, k=k, l=l: h_value(c.Y, n - l + 1, n - l + 1) * h_value(c.Z, n - k - l + 1, n - k + 1),
                lambda c, k=k, l=l: det(F_matrix(c.X, c.Y, k, l))))
    ctxs = []
    for X, Y in points:
        c = Context(X, Y)
        c.gx, c.gy = gauss(X), gauss(Y)
        c.Z = inverse(c.gy[0]).dot(c.gx[0].dot(c.gx[1]))
        ctxs.append(c)
    return _check_ctxs("canonical_forms", n, rels, ctxs)


# -- fixture evaluations -------------------------------------------------------


def check_fixture_evaluations(n: int, ts=(Fraction(7), Fraction(-3), Fraction(5, 2)),
                              zs=(Fraction(2), Fraction(-5), Fraction(1, 3))) -> IdentityReport:
    """Stated values at the special matrices, each up to a point-independent sign.

    Every fixture is evaluated at several parameter values; ``scale`` gives the
    expected value, which must match up to the same sign each time.
    """
    import random

    from . import fixtures as fx
    from .double_seed.functions import g_value, psi_value

    I = identity(n)
    rep = IdentityReport("fixtures", n, len(ts))

    def record(name, idx, pairs):
        # pairs: list over parameter values of (actual, expected)
        sign, ok, detail = None, True, ""
        for a, e in pairs:
            if e == 0:
                good = a == 0
            else:
                s = a / e
                good = s in (1, -1) and (sign is None or s == sign)
                sign = s if sign is None else sign
            if not good:
                ok, detail = False, f"{a} vs {e}"
                break
        rep.results.append((name, idx, ok, detail or (f"sign {sign}" if sign else "zero")))

    if n >= 3:
        cs = [Context(I, fx.sigma11(n, t)) for t in ts]
        record("sigma11_det", (), [(det(c.Y), t) for c, t in zip(cs, ts)])
        record("sigma11_phi11", (), [(phi(c, 1, 1), t) for c, t in zip(cs, ts)])
        record("sigma11_phi21", (), [(phi(c, 2, 1), 1) for c in cs])
        record("sigma11_phi12", (), [(phi(c, 1, 2), 0) for c in cs])
    for k in range(2, n):
        for l in range(2, n - k):
            c = Context(I, fx.sigma_kl(n, k, l))
            for nm, v, e in (("det", det(c.Y), 1), ("phi_k-1,l", phi(c, k - 1, l), 1),
                             ("phi*_k+1,l", phi_star(c, k + 1, l), 1), ("phi_k+1,l", phi(c, k + 1, l), 0),
                             ("phi*_k-1,l", phi_star(c, k - 1, l), 0), ("phi_kl", phi(c, k, l), 0)):
                record("sigma_kl_" + nm, (k, l), [(v, e)])
    for k in range(2, n - 1):
        c = Context(I, fx.sigma_k1(n, k))
        for nm, v, e in (("det", det(c.Y), 1), ("phi**_1,k-1", phi_2star(c, 1, k - 1), 1), ("phi_k1", phi(c, k, 1), 0)):
            record("sigma_k1_" + nm, (k,), [(v, e)])
    for l in range(2, n - 1):
        c = Context(I, fx.sigma_1l(n, l))
        for nm, v, e in (("det", det(c.Y), 1), ("phi_l1", phi(c, l, 1), 1), ("phi*_2l", phi_star(c, 2, l), 1),
                         ("phi_2l", phi(c, 2, l), 0), ("phi_circ_l1", phi_circ(c, l, 1), 0),
                         ("phi_1l", phi(c, 1, l), 0)):
            record("sigma_1l_" + nm, (l,), [(v, e)])
    rng = random.Random(f"fixtures:{n}")
    for i in range(2, n):
        pairs = {k: [] for k in ("g_i+1,i", "f_circ", "g_circ_i+1,i", "g_prime", "g_ii")}
        for t in ts:
            Y = np.array([[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)], dtype=object)
            c = Context(fx.x_circ(n, i, t), Y)
            diff = Y[i - 1, n - 1] - Y[i - 2, n - 1]
            pairs["g_i+1,i"].append((g_value(c.X, i + 1, i), 1))
            pairs["f_circ"].append((f_circ(c, i), diff))
            pairs["g_circ_i+1,i"].append((g_circ(c, i + 1, i), 0))
            gp = fn(c, ("g", i + 1, i)) * f_circ(c, i) - g_circ(c, i + 1, i) * det(F_matrix(c.X, c.Y, n - i + 1, 1))
            pairs["g_prime"].append((gp, diff))
            pairs["g_ii"].append((g_value(c.X, i, i), t))
        for nm, pr in pairs.items():
            record("x_circ_" + nm, (i,), pr)
    for k in range(1, n):
        for l in range(1, n - k):
            record("m_kl_det", (k, l), [(det(fx.m_kl(n, k, l, t, z)), t) for t, z in zip(ts, zs)])
            record("m_kl_psi", (k, l), [(psi_value(fx.m_kl(n, k, l, t, z), k, l), fx.p_poly(n - k - l + 1, z, t))
                                        for t, z in zip(ts, zs)])
    for k in range(2, n):
        for l in range(2, n - k):
            record("m_bar_det", (k, l), [(det(fx.m_bar_kl(n, k, l, t, z)), t) for t, z in zip(ts, zs)])
            record("m_bar_psi", (k, l), [(psi_bar(fx.m_bar_kl(n, k, l, t, z), k, l), fx.p_poly(n - k - l + 1, z, t))
                                         for t, z in zip(ts, zs)])
    for m in range(1, n + 1):
        rep.results.append(("p_poly", (m,), all(fx.p_poly(m, z, t) == det(fx.p_matrix(m, z, t))
                                                for t, z in zip(ts, zs)), ""))
    return rep


# -- the long identity ---------------------------------------------------------


def krylov_columns(A, u, count: int) -> list:
    out = [u]
    for _ in range(count - 1):
        out.append(A.dot(out[-1]))
    return out


def long_identity_sides(A, u, v):
    """Both sides of ``det(det K1 A - det K2) = (-1)^(n(n-1)/2) det K det K*``."""
    n = A.shape[0]
    col = lambda w: w.reshape(n, 1)
    ks = krylov_columns(A, u, n)
    K = np.hstack([col(w) for w in ks])
    K1 = np.hstack([col(v)] + [col(w) for w in ks[: n - 1]])
    K2 = np.hstack([col(A.dot(v))] + [col(w) for w in ks[: n - 1]])
    d1, d2 = det(K1), det(K2)
    # last row of the adjugate of K1
    w = np.empty(n, dtype=object)
    for j in range(n):
        minor = np.delete(np.delete(K1, j, axis=0), n - 1, axis=1)
        w[j] = det(minor) * (-1 if (n - 1 + j) % 2 else 1)
    rows_ = [w]
    for _ in range(n - 1):
        rows_.append(rows_[-1].dot(A))
    Kstar = np.array(rows_, dtype=object)
    lhs = det(A * d1 - identity(n) * d2)
    sgn = -1 if (n * (n - 1) // 2) % 2 else 1
    return lhs, sgn * det(K) * det(Kstar), w.dot(K1)


def check_long_identity(n: int, count: int = 10, rng_seed: int = 0) -> IdentityReport:
    import random

    rng = random.Random(f"long:{n}:{rng_seed}")
    rep = IdentityReport("long_identity", n, count)
    for t in range(count):
        A = np.array([[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)], dtype=object)
        u = np.array([Fraction(rng.randint(-9, 9)) for _ in range(n)], dtype=object)
        v = np.array([Fraction(rng.randint(-9, 9)) for _ in range(n)], dtype=object)
        lhs, rhs, wk = long_identity_sides(A, u, v)
        adj_ok = all(wk[j] == 0 for j in range(n - 1))
        rep.results.append(("long_identity", (t,), lhs == rhs and adj_ok, f"{lhs} vs {rhs}"))
    return rep
