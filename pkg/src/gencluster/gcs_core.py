"""Generalized seeds, mutation and quiver views.

A seed stores the extended exchange matrix ``b`` (mutable rows only, columns
ordered mutable then stable), one multiplicity per mutable vertex and one
string of exchange coefficients per mutable vertex. A string entry is either
a number or the label of a stable variable, which is how isolated variables
enter the exchange polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Hashable, Sequence

import numpy as np

from .exact_core import GenericityError, rank


class SeedError(ValueError):
    """Seed data violating the divisibility or string constraints."""


@dataclass(frozen=True)
class GeneralizedSeed:
    labels: tuple
    n_mutable: int
    b: np.ndarray = field(compare=False)
    d: tuple
    strings: tuple

    @property
    def mutable(self) -> tuple:
        return self.labels[: self.n_mutable]

    @property
    def stable(self) -> tuple:
        return self.labels[self.n_mutable:]

    def index(self, label) -> int:
        return self.labels.index(label)

    def row(self, label) -> dict:
        """Nonzero entries of the exchange-matrix row of a mutable vertex."""
        k = self.index(label)
        return {self.labels[j]: int(v) for j, v in enumerate(self.b[k]) if v}

    def b_hat(self) -> np.ndarray:
        """Mutable columns divided by the row multiplicity."""
        out = self.b.copy()
        for i, di in enumerate(self.d):
            out[i, : self.n_mutable] //= di
        return out

    def is_isolated(self, label) -> bool:
        j = self.index(label)
        return j >= self.n_mutable and not self.b[:, j].any()


def make_seed(labels: Sequence[Hashable], n_mutable: int, b, d=None, strings=None) -> GeneralizedSeed:
    """Validate and build a seed."""
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise SeedError("duplicate labels")
    b = np.array(b, dtype=np.int64).reshape(n_mutable, len(labels))
    d = tuple(int(x) for x in (d or [1] * n_mutable))
    if len(d) != n_mutable or any(x < 1 for x in d):
        raise SeedError("one positive multiplicity per mutable vertex")
    if strings is None:
        strings = [None] * n_mutable
    strs = []
    for i, s in enumerate(strings):
        s = tuple(s) if s is not None else (1,) + (0,) * (d[i] - 1) + (1,)
        if len(s) != d[i] + 1:
            raise SeedError(f"string {i} must have length d+1")
        if s[0] != 1 or s[-1] != 1:
            raise SeedError(f"string {i} must start and end with 1")
        strs.append(s)
    for i, di in enumerate(d):
        if any(b[i, j] % di for j in range(n_mutable)):
            raise SeedError(f"multiplicity {di} does not divide the mutable part of row {i}")
    seed = GeneralizedSeed(labels, n_mutable, b, d, tuple(strs))
    bh = seed.b_hat()[:, :n_mutable]
    if not (bh == -bh.T).all():
        raise SeedError("modified principal part is not skew-symmetric")
    return seed


def matrix_mutate(b: np.ndarray, k: int) -> np.ndarray:
    """Matrix mutation in direction ``k`` (row index of a mutable vertex)."""
    nr, nc = b.shape
    out = b.copy()
    for i in range(nr):
        for j in range(nc):
            if i == k or j == k:
                out[i, j] = -b[i, j]
            else:
                bik, bkj = int(b[i, k]), int(b[k, j])
                out[i, j] = b[i, j] + (abs(bik) * bkj + bik * abs(bkj)) // 2
    return out


def string_mutate(strings: tuple, k: int) -> tuple:
    """Reverse string ``k``; the others are untouched."""
    out = list(strings)
    out[k] = tuple(reversed(out[k]))
    return tuple(out)


def mutate_seed(seed: GeneralizedSeed, k) -> GeneralizedSeed:
    """Mutate the exchange matrix and reverse string ``k``; labels stay put."""
    kk = seed.index(k)
    if kk >= seed.n_mutable:
        raise SeedError("cannot mutate a frozen vertex")
    return replace(seed, b=matrix_mutate(seed.b, kk), strings=string_mutate(seed.strings, kk))


@dataclass(frozen=True)
class TauMonomials:
    """Exponent maps of the cluster and stable tau-monomials of one row.

    ``v_gt[r]`` and ``v_lt[r]`` are indexed by ``r = 0..d``.
    """

    u_gt: dict
    u_lt: dict
    v_gt: tuple
    v_lt: tuple


def tau_monomials(seed: GeneralizedSeed, k) -> TauMonomials:
    kk = seed.index(k)
    if kk >= seed.n_mutable:
        raise SeedError("tau-monomials need a mutable vertex")
    N, dk = seed.n_mutable, seed.d[kk]
    u_gt, u_lt = {}, {}
    v_gt = [dict() for _ in range(dk + 1)]
    v_lt = [dict() for _ in range(dk + 1)]
    for j, bkj in enumerate(seed.b[kk]):
        bkj = int(bkj)
        if bkj == 0:
            continue
        lab = seed.labels[j]
        if j < N:
            (u_gt if bkj > 0 else u_lt)[lab] = abs(bkj) // dk
            continue
        for r in range(dk + 1):
            e = (r * abs(bkj)) // dk
            if e:
                (v_gt if bkj > 0 else v_lt)[r][lab] = e
    return TauMonomials(u_gt, u_lt, tuple(v_gt), tuple(v_lt))


def _monomial(exps: dict, values: dict, power: int = 1):
    t = Fraction(1)
    for lab, e in exps.items():
        t *= values[lab] ** (e * power)
    return t


def _coefficient(entry, values: dict):
    if isinstance(entry, (int, Fraction)):
        return Fraction(entry)
    return values[entry]


def exchange_terms(seed: GeneralizedSeed, values: dict, k: int) -> list:
    """The ``d_k + 1`` summands of the generalized exchange polynomial."""
    dk = seed.d[k]
    tm = tau_monomials(seed, seed.labels[k])
    terms = []
    for r in range(dk + 1):
        t = _coefficient(seed.strings[k][r], values)
        if t != 0:
            t *= _monomial(tm.u_gt, values, r) * _monomial(tm.v_gt[r], values)
            t *= _monomial(tm.u_lt, values, dk - r) * _monomial(tm.v_lt[dk - r], values)
        terms.append(t)
    return terms


def exchange_value(seed: GeneralizedSeed, values: dict, k) -> Fraction:
    """New cluster variable produced by mutating at ``k``."""
    kk = seed.index(k)
    xk = values[seed.labels[kk]]
    if xk == 0:
        raise GenericityError(f"cluster variable {seed.labels[kk]} vanishes")
    return sum(exchange_terms(seed, values, kk), Fraction(0)) / xk


@dataclass(frozen=True)
class EvaluatedSeed:
    seed: GeneralizedSeed
    values: dict = field(compare=False)

    def mutate(self, k) -> "EvaluatedSeed":
        new = dict(self.values)
        new[k] = exchange_value(self.seed, self.values, k)
        return EvaluatedSeed(mutate_seed(self.seed, k), new)

    def cluster(self) -> tuple:
        return tuple(self.values[l] for l in self.seed.mutable)


def mutate_evaluated(es: EvaluatedSeed, k) -> EvaluatedSeed:
    return es.mutate(k)


def y_exponents(seed: GeneralizedSeed, k) -> dict:
    """Exponents of the y-variable at ``k``: quiver arrows out minus arrows in."""
    kk = seed.index(k)
    bh = seed.b_hat()[kk]
    return {seed.labels[j]: int(v) for j, v in enumerate(bh) if v}


def check_rank(seed: GeneralizedSeed) -> bool:
    return rank(seed.b) == seed.n_mutable


def arrows(seed: GeneralizedSeed) -> list:
    """Arrow list ``(source, target, multiplicity)`` of the represented quiver."""
    N = seed.n_mutable
    bh = seed.b_hat()
    out = []
    for i in range(N):
        for j in range(len(seed.labels)):
            v = int(bh[i, j])
            if v > 0:
                out.append((seed.labels[i], seed.labels[j], v))
            elif v < 0 and j >= N:
                out.append((seed.labels[j], seed.labels[i], -v))
    return out


def vertex_kind(seed: GeneralizedSeed, label) -> str:
    i = seed.index(label)
    if i < seed.n_mutable:
        return "special" if seed.d[i] > 1 else "mutable"
    return "isolated" if seed.is_isolated(label) else "frozen"


@dataclass(frozen=True)
class Quiver:
    """Vertices ``(label, kind, multiplicity)`` in seed order and an arrow multiset."""

    vertices: tuple
    arrows: dict

    def degree(self, label) -> int:
        return sum(m for (s, t), m in self.arrows.items() if label in (s, t))


def quiver_from_matrix(seed: GeneralizedSeed) -> Quiver:
    verts = []
    for i, lab in enumerate(seed.labels):
        d = seed.d[i] if i < seed.n_mutable else 1
        verts.append((lab, vertex_kind(seed, lab), d))
    arr: dict = {}
    for s, t, m in arrows(seed):
        arr[(s, t)] = arr.get((s, t), 0) + m
    return Quiver(tuple(verts), arr)


def matrix_from_quiver(q: Quiver, strings=None) -> GeneralizedSeed:
    """Rebuild the seed; arrows between two stable vertices are dropped."""
    labels = [v[0] for v in q.vertices]
    N = sum(1 for v in q.vertices if v[1] in ("mutable", "special"))
    if any(v[1] in ("mutable", "special") for v in q.vertices[N:]):
        raise SeedError("mutable vertices must come first")
    pos = {l: i for i, l in enumerate(labels)}
    d = [v[2] for v in q.vertices[:N]]
    b = np.zeros((N, len(labels)), dtype=np.int64)
    for (s, t), m in q.arrows.items():
        if s == t:
            raise SeedError("loop at " + str(s))
        for src, dst, sg in ((s, t, 1), (t, s, -1)):
            i, j = pos[src], pos[dst]
            if i < N:
                b[i, j] += sg * m * (d[i] if j < N else 1)
    return make_seed(labels, N, b, d, strings)


def to_dot(seed: GeneralizedSeed, name: Callable = str, title: str = "Q") -> str:
    """DOT text: ellipses for mutable vertices, a hexagon for special ones, boxes for stable ones."""
    lines = [f"digraph {title} {{"]
    for i, lab in enumerate(seed.labels):
        nm = name(lab)
        kind = vertex_kind(seed, lab)
        if kind == "special":
            lines.append(f'  "{nm}" [shape=hexagon, multiplicity={seed.d[i]}];')
        elif kind == "mutable":
            lines.append(f'  "{nm}" [shape=ellipse];')
        elif kind == "isolated":
            lines.append(f'  "{nm}" [shape=note];')
        else:
            lines.append(f'  "{nm}" [shape=box];')
    for s, t, m in arrows(seed):
        for _ in range(m):
            lines.append(f'  "{name(s)}" -> "{name(t)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


SEED_SCHEMA = "gencluster.seed/1"


def seed_to_json(seed: GeneralizedSeed, name: Callable = str) -> dict:
    """Plain-data document: vertices, the integer matrix and strings as exponent maps.

    A string entry is ``{}`` for the constant 1, ``{"c1": 1}`` for a stable
    variable and ``None`` for a vanishing coefficient.
    """

    def entry(e):
        if isinstance(e, (int, Fraction)):
            return {} if e == 1 else (None if e == 0 else {"": str(e)})
        return {name(e): 1}

    return {
        "schema": SEED_SCHEMA,
        "vertices": [
            {"label": name(l), "kind": vertex_kind(seed, l), "multiplicity": seed.d[i] if i < seed.n_mutable else 1}
            for i, l in enumerate(seed.labels)
        ],
        "n_mutable": seed.n_mutable,
        "b": [[int(x) for x in row] for row in seed.b],
        "strings": [[entry(e) for e in s] for s in seed.strings],
    }
