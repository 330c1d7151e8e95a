"""Poisson brackets from exact gradients, and log-canonicity checks.

Gradients follow the trace-form convention of :mod:`gencluster.exact_core`.
Each bracket takes gradient data, so a family is differentiated once and
all pairs are bracketed cheaply.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact_core import (
    diagonal_part,
    gradients,
    strict_lower,
    strict_upper,
    upper_shift,
    zeros,
)

HALF = Fraction(1, 2)


def trace_form(A: np.ndarray, B: np.ndarray):
    """``tr(A B)``."""
    n, m = A.shape
    s = Fraction(0)
    for i in range(n):
        for j in range(m):
            a = A[i, j]
            if a:
                s += a * B[j, i]
    return s


def R(A: np.ndarray) -> np.ndarray:
    return strict_upper(A) - strict_lower(A)


def r_plus(A: np.ndarray) -> np.ndarray:
    """``(R + 1)/2``: strictly upper part plus half the diagonal."""
    return strict_upper(A) + diagonal_part(A) * HALF


def tau(A: np.ndarray) -> np.ndarray:
    S = upper_shift(A.shape[0])
    return S.dot(A).dot(S.T)


def trace_form_0(A: np.ndarray, B: np.ndarray):
    return sum((A[i, i] * B[i, i] for i in range(A.shape[0])), Fraction(0))


def bracket_D_grads(X, Y, ga, gb):
    """Bracket on the double; ``ga = (grad_X, grad_Y)`` of the first function."""
    GX1, GY1 = ga
    GX2, GY2 = gb
    EL1 = GX1.dot(X) + GY1.dot(Y)
    EL2 = GX2.dot(X) + GY2.dot(Y)
    ER1 = X.dot(GX1) + Y.dot(GY1)
    ER2 = X.dot(GX2) + Y.dot(GY2)
    return (
        trace_form(r_plus(EL1), EL2)
        - trace_form(r_plus(ER1), ER2)
        + trace_form(X.dot(GX1), Y.dot(GY2))
        - trace_form(GX1.dot(X), GY2.dot(Y))
    )


def bracket_r_grads(A, g1, g2):
    """Standard bracket on GL_n.

    Left gradients are ``grad . A`` and right gradients ``A . grad``, the
    orientation of ``E_L`` and ``E_R`` on the double. With it the diagonal
    ``(X, X)`` carries this bracket and the maps to ``Z`` and ``B'_+`` are Poisson.
    """
    L1, L2 = g1.dot(A), g2.dot(A)
    R1, R2 = A.dot(g1), A.dot(g2)
    return HALF * (trace_form(R(L1), L2) - trace_form(R(R1), R2))


def bracket_star_grads(U, g1, g2):
    """Bracket induced on ``U = X^-1 Y``."""
    c1 = g1.dot(U) - U.dot(g1)
    c2 = g2.dot(U) - U.dot(g2)
    return trace_form(r_plus(c1), c2) - trace_form(c1, g2.dot(U))


def bracket_b_grads(A, g1, g2):
    """The r-bracket corrected by the shift ``tau(A) = S A S^T``; for upper triangular ``A``."""
    extra = trace_form_0(A.dot(g1), tau(g2.dot(A))) - trace_form_0(tau(g1.dot(A)), A.dot(g2))
    return bracket_r_grads(A, g1, g2) + HALF * extra


def bracket_D(f1, f2, X, Y):
    (ga, gb) = gradients([f1, f2], X, Y)
    return bracket_D_grads(X, Y, ga, gb)


def bracket_r(f1, f2, A):
    (g1, g2) = [g[0] for g in gradients([f1, f2], A)]
    return bracket_r_grads(A, g1, g2)


def bracket_star(f1, f2, U):
    (g1, g2) = [g[0] for g in gradients([f1, f2], U)]
    return bracket_star_grads(U, g1, g2)


def upper_gradient(f, A):
    """Gradient of ``f`` restricted to upper triangular matrices."""
    g = gradients([f], A)[0][0]
    n = A.shape[0]
    for i in range(n):
        for j in range(n):
            if i < j:  # entry (i, j) of grad pairs with a_ji, below the diagonal
                g[i, j] = Fraction(0)
    return g


def bracket_b(f1, f2, A):
    return bracket_b_grads(A, upper_gradient(f1, A), upper_gradient(f2, A))


def omega_from_grads(vals, grads, bracket) -> np.ndarray:
    """``omega_ij = {f_i, f_j} / (f_i f_j)`` from precomputed data."""
    m = len(vals)
    W = zeros(m)
    for i in range(m):
        for j in range(i + 1, m):
            w = bracket(grads[i], grads[j]) / (vals[i] * vals[j])
            W[i, j] = w
            W[j, i] = -w
    return W


def omega_D(fns, X, Y) -> np.ndarray:
    vals = [f(X, Y) for f in fns]
    grads = gradients(fns, X, Y)
    return omega_from_grads(vals, grads, lambda a, b: bracket_D_grads(X, Y, a, b))


def omega_star(fns, U) -> np.ndarray:
    vals = [f(U) for f in fns]
    grads = [g[0] for g in gradients(fns, U)]
    return omega_from_grads(vals, grads, lambda a, b: bracket_star_grads(U, a, b))


@dataclass
class BracketReport:
    """Outcome of a log-canonicity or compatibility check."""

    name: str
    n: int
    passed: bool
    labels: list = field(default_factory=list)
    omega: list | None = None
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "passed": self.passed,
            "labels": self.labels,
            "omega": [[str(x) for x in r] for r in self.omega] if self.omega is not None else None,
            "failures": [str(f) for f in self.failures],
            "details": {k: str(v) for k, v in self.details.items()},
        }


def log_canonical_check(name, n, labels, omegas) -> BracketReport:
    """Constancy of the omega matrices computed at several points."""
    first = omegas[0]
    fails = []
    for t, W in enumerate(omegas[1:], start=1):
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                if W[i, j] != first[i, j]:
                    fails.append((labels[i], labels[j], first[i, j], W[i, j], t))
    return BracketReport(
        name, n, not fails, list(labels),
        [list(r) for r in first], fails,
        {"points": len(omegas), "all_integer": all(Fraction(x).denominator == 1 for x in first.flat)},
    )


def compatibility_lambda(b_hat: np.ndarray, omega: np.ndarray, n_mutable: int):
    """Return ``lam`` if ``b_hat omega = lam [I 0]``, otherwise ``None``."""
    P = np.array(b_hat, dtype=object).dot(omega)
    lam = P[0, 0]
    for i in range(P.shape[0]):
        for j in range(P.shape[1]):
            want = lam if i == j else 0
            if P[i, j] != want:
                return None
    return lam


# -- verification suites ----------------------------------------------------------


def family_omega_D(labels, X, Y, corrupt=None):
    """Omega of the labelled functions under the double bracket at one point.

    ``corrupt`` maps a label to a function replacing its value, for negative
    controls.
    """
    from .double_seed.functions import Context, evaluate
    from .exact_core import jacobian

    def fam(A, B):
        ctx = Context(A, B)
        out = []
        for lab in labels:
            v = evaluate(lab, ctx)
            if corrupt and lab in corrupt:
                v = corrupt[lab](v)
            out.append(v)
        return out

    vals = fam(X, Y)
    grads = jacobian(fam, X, Y)
    return omega_from_grads(vals, grads, lambda a, b: bracket_D_grads(X, Y, a, b))


def family_omega_star(n, labels, U, corrupt=None):
    from .double_seed.dual import evaluate_dual
    from .exact_core import jacobian

    def fam(V):
        vals = evaluate_dual(n, labels, V)
        out = []
        for lab in labels:
            v = vals[lab]
            if corrupt and lab in corrupt:
                v = corrupt[lab](v)
            out.append(v)
        return out

    vals = fam(U)
    grads = [g[0] for g in jacobian(fam, U)]
    return omega_from_grads(vals, grads, lambda a, b: bracket_star_grads(U, a, b))


def verify_log_canonical(n: int, points, kind: str = "D", corrupt=None) -> BracketReport:
    """Constancy of omega for the initial family (``D``) or the dual family (``star``)."""
    from .double_seed.dual import build_dual_seed
    from .double_seed.functions import Context, label_name
    from .double_seed.seed import build_initial_seed

    if kind == "D":
        seed = build_initial_seed(n)
        omegas = [family_omega_D(seed.labels, X, Y, corrupt) for X, Y in points]
    elif kind == "star":
        seed = build_dual_seed(n)
        omegas = [family_omega_star(n, seed.labels, Context(X, Y).U, corrupt) for X, Y in points]
    else:
        raise ValueError(f"unknown bracket kind {kind!r}")
    rep = log_canonical_check(f"log_canonical_{kind}", n, [label_name(l) for l in seed.labels], omegas)
    rep.details["omega_matrix"] = omegas[0]
    return rep


def verify_compatibility(seed, omega, name: str = "compatibility") -> BracketReport:
    """``{log x_u, log y_v} = -delta_uv`` from the y-exponents and omega.

    ``y_v`` is the monomial with exponents in row ``v`` of ``b_hat``, so the
    bracket is ``-(b_hat omega)[v, u]``.
    """
    from .double_seed.functions import label_name

    P = np.array(seed.b_hat(), dtype=object).dot(omega)
    fails = []
    for v in range(seed.n_mutable):
        for u in range(len(seed.labels)):
            val = -P[v, u]
            want = -1 if u == v else 0
            if val != want:
                fails.append((label_name(seed.labels[u]), label_name(seed.labels[v]), val))
    lam = compatibility_lambda(seed.b_hat(), omega, seed.n_mutable)
    return BracketReport(name, 0, not fails, [label_name(l) for l in seed.labels], None, fails,
                         {"lambda": -lam if lam is not None else None})


def log_bracket(omega, labels, u, exps: dict):
    """``{log x_u, log prod x^e}`` from omega."""
    i = labels.index(u)
    return sum((e * omega[i, labels.index(l)] for l, e in exps.items()), Fraction(0))


def casimir_rows(omega, labels, n: int) -> dict:
    """Rows of omega for ``det X``, ``det Y`` and the ``c_i``; all should vanish."""
    names = [("g", 1, 1), ("h", 1, 1)] + [("c", i) for i in range(1, n)]
    return {lab: all(omega[labels.index(lab), j] == 0 for j in range(len(labels))) for lab in names}


def leibniz_defect(bracket, f, g, h, *mats):
    """``{fg, h} - f{g, h} - g{f, h}``, zero for a biderivation."""
    fg = lambda *a: f(*a) * g(*a)
    return bracket(fg, h, *mats) - f(*mats) * bracket(g, h, *mats) - g(*mats) * bracket(f, h, *mats)


def homogeneity_report(n: int, points) -> dict:
    """Diagonal parts of ``E_L log f`` and ``E_R log f``: constant and equal to the closed weights."""
    from .double_seed.functions import family_labels, label_name
    from .double_seed.weights import numeric_weights, toric_weights

    labels = family_labels(n, with_c=False)
    out = {}
    per_point = [numeric_weights(labels, X, Y) for X, Y in points]
    for lab in labels:
        wl, wr = toric_weights(n, lab)
        ok = all(p[lab] == (tuple(map(Fraction, wl)), tuple(map(Fraction, wr))) for p in per_point)
        out[label_name(lab)] = ok
    return out


def zmap(X, Y):
    """``(Y_{>0})^-1 X_{>=0}`` from the Gauss factors."""
    from .exact_core import inverse
    from .normal_forms import gauss

    PX, DX, _ = gauss(X)
    PY, _, _ = gauss(Y)
    return inverse(PY).dot(PX).dot(DX)


def b_prime(U):
    """Lower right ``(n-1)``-block of ``B_+`` in ``U = N_- B_+ C N_-^-1``."""
    from .normal_forms import bc_form

    return bc_form(U)[1][1:, 1:]


def _h_minors(m: int):
    from .double_seed.functions import h_value

    return [((i, j), (lambda A, i=i, j=j: h_value(A, i, j))) for i in range(1, m + 1) for j in range(i, m + 1)]


def verify_zmap_poisson(n: int, points, sign: int = 1) -> BracketReport:
    """``{f1 o Z, f2 o Z}_D = {f1, f2}_r o Z`` over trailing-type minors.

    ``sign = -1`` asserts the opposite sign instead, as a negative control.
    """
    fs = _h_minors(n)
    fails = []
    for t, (X, Y) in enumerate(points):
        Z = zmap(X, Y)
        fz = [lambda P, Q, f=f: f(zmap(P, Q)) for _, f in fs]
        gz = gradients(fz, X, Y)
        gr = [g[0] for g in gradients([f for _, f in fs], Z)]
        for a in range(len(fs)):
            for b in range(a + 1, len(fs)):
                lhs = bracket_D_grads(X, Y, gz[a], gz[b])
                rhs = sign * bracket_r_grads(Z, gr[a], gr[b])
                if lhs != rhs:
                    fails.append((fs[a][0], fs[b][0], t, lhs, rhs))
    return BracketReport("zmap_poisson", n, not fails, [str(i) for i, _ in fs], None, fails,
                         {"points": len(points)})


def verify_poisson_b(n: int, points) -> BracketReport:
    """``{f1 o B'_+, f2 o B'_+}_* = {f1, f2}_b o B'_+`` over minors of ``B'_+``."""
    from .double_seed.functions import Context

    fs = _h_minors(n - 1)
    fails = []
    for t, (X, Y) in enumerate(points):
        U = Context(X, Y).U
        B = b_prime(U)
        gb = [g[0] for g in gradients([lambda V, f=f: f(b_prime(V)) for _, f in fs], U)]
        gu = [upper_gradient(f, B) for _, f in fs]
        for a in range(len(fs)):
            for b in range(a + 1, len(fs)):
                lhs = bracket_star_grads(U, gb[a], gb[b])
                rhs = bracket_b_grads(B, gu[a], gu[b])
                if lhs != rhs:
                    fails.append((fs[a][0], fs[b][0], t, lhs, rhs))
    return BracketReport("poisson_b", n, not fails, [str(i) for i, _ in fs], None, fails,
                         {"points": len(points)})


def verify_star_vs_D(n: int, points) -> BracketReport:
    """Brackets of functions of ``U = X^-1 Y`` agree on the double and on ``U``."""
    from .double_seed.dual import build_dual_seed, evaluate_dual
    from .double_seed.functions import Context, label_name
    from .exact_core import inverse, jacobian

    labels = build_dual_seed(n).labels
    fails = []
    for t, (X, Y) in enumerate(points):
        U = Context(X, Y).U
        fu = lambda V: [evaluate_dual(n, labels, V)[l] for l in labels]
        fxy = lambda A, B: fu(inverse(A).dot(B))
        gs = [g[0] for g in jacobian(fu, U)]
        gd = jacobian(fxy, X, Y)
        for a in range(len(labels)):
            for b in range(a + 1, len(labels)):
                lhs = bracket_D_grads(X, Y, gd[a], gd[b])
                rhs = bracket_star_grads(U, gs[a], gs[b])
                if lhs != rhs:
                    fails.append((label_name(labels[a]), label_name(labels[b]), t))
    return BracketReport("star_vs_D", n, not fails, [label_name(l) for l in labels], None, fails, {})
