"""Explicit mutation sequences on the initial seed, and the n=2 exchange graph.

Walks run on the full evaluated seed of ``Q_n``; vertices keep their
initial labels. Positions are given in grid coordinates
``(i, j)``: row ``i`` from the top, column ``j`` from the left, with
``g_ij`` at ``i >= j`` and ``f_{n-j+1, j-i}`` (or its boundary alias) at
``i < j``.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .double_seed.dual import build_dual_seed, dual_function
from .double_seed.functions import Context, canonical, h_value, label_name, psi_value
from .double_seed.sampling import sample_point
from .double_seed.seed import build_initial_seed, evaluate_seed
from .exact_core import GenericityError, det, hstack
from .gcs_core import EvaluatedSeed, GeneralizedSeed, SeedError, matrix_mutate
from .identities import IdentityReport


def grid_label(n: int, i: int, j: int) -> tuple:
    return ("g", i, j) if i >= j else canonical(n, ("f", n - j + 1, j - i))


def _minor(A, rows, cols):
    return det(A[np.ix_([r - 1 for r in rows], [c - 1 for c in cols])]) if rows else Fraction(1)


def _rng(a, b):
    return list(range(a, b + 1))


# -- sequence S ----------------------------------------------------------------


def s_stage(n: int, k: int) -> list:
    """Grid vertices mutated at step ``k``, diagonal by diagonal."""
    verts = [(i, j) for i in range(k + 1, n + 1) for j in range(2, n - k + 2)]
    return sorted(verts, key=lambda v: (v[1] - v[0], v))


def s_word(n: int) -> list:
    return [grid_label(n, i, j) for k in range(1, n) for (i, j) in s_stage(n, k)]


def chi(X, Y, k: int, i: int, j: int):
    """Closed form of the value at grid vertex ``(i, j)`` after ``k`` steps."""
    n = X.shape[0]
    if k == 0:
        if i >= j:
            return _minor(X, _rng(i, n), _rng(j, n + j - i))
        return _minor(hstack(X[:, j - 1:], Y[:, n + i - j:]), _rng(i, n), _rng(1, n - i + 1))
    if i - k + 1 > j:
        return _minor(X, _rng(i - k, n), _rng(1, k) + _rng(j + k, n + j - i + k))
    M = hstack(X[:, [c - 1 for c in _rng(1, k) + _rng(j + k, n)]], Y[:, n + i - j - k:])
    return _minor(M, _rng(i - k, n), _rng(1, M.shape[1]))


def _no_edges(seed: GeneralizedSeed, labels) -> bool:
    idx = [seed.index(l) for l in labels]
    return all(seed.b[a, b] == 0 for a in idx for b in idx)


def run_S(es: EvaluatedSeed, n: int, X=None, Y=None, rep=None, order_rng=None) -> EvaluatedSeed:
    """Apply S step by step; check the stage formulas against the point when given."""
    for k in range(1, n):
        stage = s_stage(n, k)
        diags = sorted({j - i for i, j in stage})
        for dgl in diags:
            verts = [v for v in stage if v[1] - v[0] == dgl]
            labs = [grid_label(n, *v) for v in verts]
            if rep is not None:
                rep.results.append(("S_commuting", (k, dgl), _no_edges(es.seed, labs), ""))
            if order_rng is not None:
                order_rng.shuffle(labs)
            for lab in labs:
                es = es.mutate(lab)
        if rep is not None and X is not None:
            for i, j in stage:
                got = es.values[grid_label(n, i, j)]
                want = chi(X, Y, k, i, j)
                rep.results.append(("chi", (k, i, j), got == want, f"{got} vs {want}"))
            ctx = Context(X, Y)
            for j in range(2, n - k + 2):
                sg = -1 if (n - j - k + 1) * (n - k - 1) % 2 else 1
                want = ctx.detX * sg * h_value(ctx.U, k + 1, n - j + 2)
                got = es.values[grid_label(n, k + 1, j)]
                rep.results.append(("chi_top_row", (k, j), got == want, f"{got} vs {want}"))
    return es


def q_prime_map(n: int) -> dict:
    """Vertex of ``S(Q_n)`` -> vertex of the dual quiver that it matches."""
    out = {("phi", k, l): ("phi", k, l) for k in range(1, n) for l in range(1, n - k + 1)}
    out[("h", 1, 1)] = ("h", 1, 1)
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            src = grid_label(n, i, n - j + 2)
            out[src] = ("h", i, i) if i == j else ("f", j - i, n - j + 1)
    return out


def _arrow(seed, a, b):
    ia, ib = seed.index(a), seed.index(b)
    if ia < seed.n_mutable:
        return int(seed.b_hat()[ia, ib])
    if ib < seed.n_mutable:
        return -int(seed.b_hat()[ib, ia])
    return 0


def _corrupted(es: EvaluatedSeed, corrupt) -> EvaluatedSeed:
    """Perturb initial values through ``corrupt``, a map label -> function; for negative controls."""
    if not corrupt:
        return es
    vals = dict(es.values)
    for lab, fn in corrupt.items():
        vals[lab] = fn(vals[lab])
    return EvaluatedSeed(es.seed, vals)


def check_S(n: int, points, order_seed: int | None = None, corrupt=None) -> IdentityReport:
    """Stage formulas, strings, the final values on the dual subquiver and its shape."""
    rep = IdentityReport("sequence_S", n, len(points))
    init = build_initial_seed(n)
    dual = build_dual_seed(n)
    qmap = q_prime_map(n)
    end = None
    for t, (X, Y) in enumerate(points):
        es0 = _corrupted(evaluate_seed(init, X, Y), corrupt)
        rng = random.Random(order_seed * 1000 + t) if order_seed is not None else None
        es = run_S(es0, n, X, Y, rep, rng)
        end = es.seed
        ctx = Context(X, Y)
        for src, dst in qmap.items():
            kind, i, j, sg = dual_function(n, dst)
            if kind == "psi":
                want = ctx.detX ** (n - i - j + 1) * psi_value(ctx.U, i, j)
            else:
                want = ctx.detX * sg * h_value(ctx.U, i, j) if i > 1 else ctx.detX * det(ctx.U)
            rep.results.append(("final_value", (label_name(src),), es.values[src] == want, ""))
        back = es
        for lab in reversed(s_word(n)):
            back = back.mutate(lab)
        same = back.values == es0.values and np.array_equal(back.seed.b, init.b)
        rep.results.append(("reverse_restores", (t,), same, ""))
    rep.results.append(("strings_unchanged", (), end.strings == init.strings, ""))
    # shape of the subquiver
    bad = []
    for a in qmap:
        if end.index(a) >= end.n_mutable and dual.index(qmap[a]) >= dual.n_mutable:
            continue
        for b in qmap:
            if _arrow(end, a, b) != _arrow(dual, qmap[a], qmap[b]):
                bad.append((label_name(a), label_name(b)))
    rep.results.append(("subquiver_matches_dual", (), not bad, str(bad[:3])))
    # only the diagonal h(U) vertices and phi11 touch the rest
    inside = set(qmap)
    touching = set()
    for a in end.labels:
        if a in inside or a[0] == "c":
            continue
        for b in inside:
            if _arrow(end, a, b) or _arrow(end, b, a):
                touching.add(b)
    allowed = {a for a, b in qmap.items() if b[0] == "h" and b[1] == b[2] and b[1] > 1} | {("phi", 1, 1)}
    rep.results.append(("attachment", (), touching <= allowed, str(sorted(map(label_name, touching)))))
    return rep


# -- Gamma walks -----------------------------------------------------------------


def _gm(X, m, i, j):
    return _minor(X, _rng(i, m), _rng(j, j + m - i))


def _fm(X, Y, m, k, l):
    n = X.shape[0]
    M = hstack(X[:, n - k:], Y[:, n - l:])
    return _minor(M, _rng(m - k - l + 1, m), _rng(1, k + l))


def _hm(Y, m, i, j):
    n = Y.shape[0]
    return _minor(Y, _rng(i, m + i - j), _rng(n - m + j, n))


def gamma_function(X, Y, m: int, s: int, p: int):
    """Function at row ``s`` (from the bottom) and position ``p`` of the ``m``-th grid."""
    n = X.shape[0]
    if p <= n - s + 1:
        return _gm(X, m, m - s + 1, p)
    if p <= n:
        k = n - p + 1
        return _fm(X, Y, m, k, s - k)
    r = m - s + 1 - (p - n - 1)
    return _hm(Y, m, r, m - s + 1)


def gamma_new_value(X, Y, m: int, j: int, s: int):
    """Predicted value at row ``s`` after the ``j``-th stage of the ``m``-th grid."""
    n = X.shape[0]
    if s <= j + 1:
        return _minor(X, _rng(m - s, m - 1), _rng(n - j, n - j + s - 1))
    M = hstack(X[:, n - j - 1:], Y[:, n - m + j + m - s + 1:])
    return _minor(M, _rng(m - s, m - 1), _rng(1, M.shape[1]))


def _locate(es: EvaluatedSeed, value, used):
    return [l for l, v in es.values.items() if (v == value or v == -value) and l not in used]


@dataclass
class WalkTranscript:
    n: int
    steps: list = field(default_factory=list)  # (label, new value)

    def record(self, lab, val):
        self.steps.append((label_name(lab), str(val)))

    def to_json(self) -> dict:
        return {"n": self.n, "steps": [{"vertex": a, "value": b} for a, b in self.steps]}


def locator_point(n: int, rng_seed: int = 0):
    """A point with wide-range entries, used only to tell vertices apart by value."""
    return sample_point(n, 7919 + rng_seed, lo=-10**6, hi=10**6)


def walk_generic(n: int, X, Y) -> bool:
    """No cluster variable met by S or by the stage walk vanishes at ``(X, Y)``."""
    try:
        run_S(evaluate_seed(build_initial_seed(n), X, Y), n)
        run_gamma_walk(n, [locator_point(n), (X, Y)])
    except GenericityError:
        return False
    return True


def walk_points(n: int, count: int, rng_seed: int = 0, max_tries: int = 100) -> list:
    """Generic sample points that also stay generic along both walks; rejected draws are skipped."""
    out = []
    t = 0
    while len(out) < count:
        if t >= max_tries * count:
            raise GenericityError(f"no walk-generic points for n={n}")
        X, Y = sample_point(n, rng_seed * 1000 + t)
        t += 1
        if walk_generic(n, X, Y):
            out.append((X, Y))
    return out


def run_gamma_walk(n: int, points, rep: IdentityReport | None = None, order_rng=None, transcript=None,
                   corrupt=None):
    """Run the stages for ``m = n, ..., 2`` at several points in lockstep.

    Vertices are found by their value at the first point, which should be a
    :func:`locator_point`. Returns the final seeds and, per point, every
    cluster value met on the way.
    """
    seeds = [evaluate_seed(build_initial_seed(n), X, Y) for X, Y in points]
    # the locator stays clean so that vertices can still be found
    seeds = seeds[:1] + [_corrupted(es, corrupt) for es in seeds[1:]]
    seen = [set(es.values.values()) for es in seeds]
    XL, YL = points[0]
    for m in range(n, 1, -1):
        for j in range(0, n):
            p = n - j + 1
            targets = []
            for s in range(1, m):
                hits = _locate(seeds[0], gamma_function(XL, YL, m, s, p), [t for t, _ in targets])
                if len(hits) != 1:
                    if rep is not None:
                        rep.results.append(("locate", (m, j, s), False, f"{len(hits)} candidates"))
                    return seeds, seen
                targets.append((hits[0], s))
            labs = [t for t, _ in targets]
            if rep is not None:
                rep.results.append(("gamma_commuting", (m, j), _no_edges(seeds[0].seed, labs), ""))
            order = list(targets)
            if order_rng is not None:
                order_rng.shuffle(order)
            for lab, s in order:
                try:
                    seeds = [es.mutate(lab) for es in seeds]
                except SeedError as e:
                    if rep is not None:
                        rep.results.append(("gamma_mutable", (m, j, s), False, str(e)))
                    return seeds, seen
                for q, es in enumerate(seeds):
                    seen[q].add(es.values[lab])
                if transcript is not None:
                    transcript.record(lab, seeds[1 if len(seeds) > 1 else 0].values[lab])
            if rep is not None:
                for lab, s in targets:
                    ok = True
                    for (X, Y), es in zip(points, seeds):
                        want = gamma_new_value(X, Y, m, j, s)
                        ok = ok and es.values[lab] in (want, -want)
                    rep.results.append(("gamma_value", (m, j, s), ok, ""))
    return seeds, seen


def verify_all_x_recovered(n: int, points, order_seed: int | None = None, rng_seed: int = 0,
                           corrupt=None) -> IdentityReport:
    rep = IdentityReport("all_x_recovered", n, len(points))
    rng = random.Random(order_seed) if order_seed is not None else None
    pts = [locator_point(n, rng_seed)] + list(points)
    _, seen = run_gamma_walk(n, pts, rep, rng, corrupt=corrupt)
    for t, (X, Y) in enumerate(pts):
        absvals = {abs(v) for v in seen[t]}
        missing = [(i + 1, j + 1) for i in range(n) for j in range(n) if abs(X[i, j]) not in absvals]
        rep.results.append(("x_recovered", (t,), not missing, f"missing {missing}"))
    return rep


# -- exchange graph for n = 2 -------------------------------------------------------


def _seed_key(es: EvaluatedSeed):
    N = es.seed.n_mutable
    bh = es.seed.b_hat()
    labels = es.seed.labels
    fro = {l: es.values[l] for l in labels[N:]}
    items = []
    for i in range(N):
        row = tuple(sorted((str(es.values[labels[j]]), int(bh[i, j])) for j in range(len(labels)) if bh[i, j]))
        items.append((es.values[labels[i]], row))
    return frozenset(v for v, _ in items), frozenset(items), tuple(sorted(map(str, fro.values())))


@dataclass
class ExchangeGraph:
    vertices: int
    edges: int
    degrees: dict
    clusters: list

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": self.edges, "degrees": self.degrees}


def enumerate_exchange_graph(es0: EvaluatedSeed, limit: int = 10_000, by_cluster: bool = True) -> ExchangeGraph:
    """Breadth-first closure of an evaluated seed under single mutations.

    Seeds are identified by their set of cluster values when ``by_cluster``
    holds, otherwise by values together with exchange rows.
    """

    def key(es):
        k = _seed_key(es)
        return k[0] if by_cluster else k[1]

    start = key(es0)
    index = {start: 0}
    reps = [es0]
    edges = set()
    queue = deque([es0])
    while queue:
        es = queue.popleft()
        a = index[key(es)]
        for lab in es.seed.mutable:
            nxt = es.mutate(lab)
            kb = key(nxt)
            if kb not in index:
                if len(index) >= limit:
                    raise RuntimeError("exchange graph exceeds the size limit")
                index[kb] = len(index)
                reps.append(nxt)
                queue.append(nxt)
            b = index[kb]
            edges.add((min(a, b), max(a, b)))
    deg: dict = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    profile: dict = {}
    for v in deg.values():
        profile[v] = profile.get(v, 0) + 1
    return ExchangeGraph(len(index), len(edges), profile, [sorted(map(str, k)) for k in index])


def enumerate_exchange_graph_n2(rng_seed: int = 0, by_cluster: bool = False) -> ExchangeGraph:
    # wide-range entries keep distinct seeds from sharing values
    X, Y = locator_point(2, rng_seed)
    return enumerate_exchange_graph(evaluate_seed(build_initial_seed(2), X, Y), by_cluster=by_cluster)


def b3_cluster_count(values=None) -> int:
    """Clusters of an ordinary cluster algebra of type B3, by seed BFS.

    Runs on the rank-3 skew-symmetrizable matrix with a short root, at
    random positive rational initial values, and counts distinct clusters.
    """
    rng = random.Random(7)
    B = np.array([[0, 1, 0], [-1, 0, 1], [0, -2, 0]], dtype=np.int64)
    x = values or [Fraction(rng.randint(2, 50), rng.randint(1, 9)) for _ in range(3)]
    start = (tuple(x), B)
    seen = {frozenset(x)}
    queue = deque([start])
    while queue:
        xs, b = queue.popleft()
        for k in range(3):
            pos = Fraction(1)
            neg = Fraction(1)
            for j in range(3):
                if b[j, k] > 0:
                    pos *= xs[j] ** int(b[j, k])
                elif b[j, k] < 0:
                    neg *= xs[j] ** int(-b[j, k])
            new = list(xs)
            new[k] = (pos + neg) / xs[k]
            key = frozenset(new)
            if key not in seen:
                seen.add(key)
                if len(seen) > 10_000:
                    raise RuntimeError("no finite closure")
                queue.append((tuple(new), matrix_mutate(b, k)))
    return len(seen)


def transcript_json(n: int, rng_seed: int = 0) -> str:
    X, Y = sample_point(n, rng_seed)
    tr = WalkTranscript(n)
    es = evaluate_seed(build_initial_seed(n), X, Y)
    for lab in s_word(n):
        es = es.mutate(lab)
        tr.record(lab, es.values[lab])
    return json.dumps(tr.to_json(), indent=2)
