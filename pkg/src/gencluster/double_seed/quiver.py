"""The initial quiver on the g, h, f, phi functions.

Each vertex lists its outgoing and incoming neighbours; labels pass through
``canonical`` so that boundary f's, g's and h's land on the right vertex.
Only mutable vertices determine rows of the exchange matrix. Frozen vertex
listings are kept for the consistency report.
"""

from __future__ import annotations

from collections import Counter

from .functions import canonical, family_labels


def is_frozen(lab: tuple) -> bool:
    return (lab[0] == "g" and lab[2] == 1) or (lab[0] == "h" and lab[1] == 1) or lab[0] == "c"


def _neighbours_general(n: int, lab: tuple):
    fam, a, b = lab
    out: list = []
    inn: list = []
    if fam == "phi":
        k, l = a, b
        if k == 1 and l == 1:
            out = [("phi", 2, 1), ("h", 1, 1)]
            inn = [("phi", 1, 2), ("g", 1, 1)]
        elif k != 1 and l != 1 and k + l < n:
            out = [("phi", k + 1, l), ("phi", k, l - 1), ("phi", k - 1, l + 1)]
            inn = [("phi", k, l + 1), ("phi", k + 1, l - 1), ("phi", k - 1, l)]
        elif k != 1 and l != 1 and k + l == n:
            out = [("phi", k, l - 1), ("f", k - 1, l)]
            inn = [("phi", k - 1, l), ("f", k, l - 1)]
        elif l == 1 and k == n - 1:
            out = [("phi", 1, n - 1), ("f", n - 2, 1), ("g", 1, 1)]
            inn = [("phi", 1, n - 2), ("g", 2, 2)]
        elif l == 1:
            out = [("phi", k - 1, 2), ("phi", 1, k)]
            inn = [("phi", k, 2), ("phi", 1, k - 1)]
        elif k == 1 and l == n - 1:
            out = [("phi", 1, n - 2), ("h", 2, 2)]
            inn = [("phi", n - 1, 1), ("f", 1, n - 2), ("h", 1, 1)]
        else:  # k == 1, 2 <= l <= n - 2
            out = [("phi", 2, l), ("phi", 1, l - 1), ("phi", l + 1, 1)]
            inn = [("phi", 1, l + 1), ("phi", 2, l - 1), ("phi", l, 1)]
    elif fam == "f":
        k, l = a, b
        out = [("f", k + 1, l - 1), ("f", k, l + 1), ("f", k - 1, l)]
        inn = [("f", k - 1, l + 1), ("f", k, l - 1), ("f", k + 1, l)]
    elif fam == "g":
        i, j = a, b
        if i == 1 and j == 1:
            out = [("g", 2, 1), ("phi", 1, 1)]
            inn = [("phi", n - 1, 1)]
        elif j == 1 and i == n:
            inn = [("g", n, 2)]
        elif j == 1:
            out = [("g", i + 1, 2)]
            inn = [("g", i, 2)]
        elif i == n:
            out = [("g", n - 1, j), ("g", n, j - 1)]
            inn = [("g", n - 1, j - 1), ("g", n, j + 1)]
        else:
            out = [("g", i + 1, j + 1), ("g", i, j - 1), ("g", i - 1, j)]
            inn = [("g", i, j + 1), ("g", i - 1, j - 1), ("g", i + 1, j)]
    elif fam == "h":
        i, j = a, b
        if i == 1 and j == 1:
            out = [("phi", 1, n - 1)]
            inn = [("phi", 1, 1)]
        elif i == 1 and j == n:
            inn = [("h", 2, n)]
        elif i == 1:
            out = [("h", 2, j + 1)]
            inn = [("h", 2, j)]
        elif i == n and j == n:
            out = [("g", n, n), ("h", n - 1, n)]
            inn = [("f", 1, 1)]
        elif i == j:
            out = [("f", 1, n - i), ("h", i - 1, i)]
            inn = [("f", 1, n - i + 1), ("h", i, i + 1)]
        elif j == n:
            out = [("h", i, n - 1), ("h", i - 1, n)]
            inn = [("h", i + 1, n), ("h", i - 1, n - 1)]
        else:
            out = [("h", i, j - 1), ("h", i - 1, j), ("h", i + 1, j + 1)]
            inn = [("h", i + 1, j), ("h", i, j + 1), ("h", i - 1, j - 1)]
    return out, inn


# The n = 2 quiver: an oriented triangle on the mutable vertices plus the
# arrows to frozen vertices. The frozen arrows at g22 and h22 are the unique
# small choice making every one-step mutation a polynomial; the global
# orientation is the one giving {log x_u, log y_v} = -delta_uv.
_N2_ARROWS = [
    (("g", 2, 2), ("phi", 1, 1), 1),
    (("h", 2, 2), ("g", 2, 2), 1),
    (("phi", 1, 1), ("h", 2, 2), 1),
    (("phi", 1, 1), ("g", 1, 1), 1),
    (("h", 1, 1), ("phi", 1, 1), 1),
    (("g", 1, 1), ("g", 2, 2), 1),
    (("g", 2, 2), ("g", 2, 1), 1),
    (("h", 2, 2), ("h", 1, 2), 1),
]


def neighbour_lists(n: int, lab: tuple):
    """Canonical out- and in-neighbour multisets of a vertex, ``n > 2``."""
    out, inn = _neighbours_general(n, lab)
    co = Counter(c for c in (canonical(n, x) for x in out) if c is not None)
    ci = Counter(c for c in (canonical(n, x) for x in inn) if c is not None)
    return co, ci


def quiver_arrows(n: int) -> Counter:
    """Arrow multiset ``{(source, target): count}`` with a mutable endpoint."""
    if n == 2:
        return Counter({(s, t): m for s, t, m in _N2_ARROWS})
    if n < 2:
        raise ValueError("n must be at least 2")
    arrows: Counter = Counter()
    for lab in family_labels(n, with_c=False):
        if is_frozen(lab):
            continue
        co, ci = neighbour_lists(n, lab)
        for t, m in co.items():
            arrows[(lab, t)] = max(arrows[(lab, t)], m)
        for s, m in ci.items():
            arrows[(s, lab)] = max(arrows[(s, lab)], m)
    for (s, t) in list(arrows):
        if (t, s) in arrows and s < t:
            raise ValueError(f"two-cycle between {s} and {t}")
    return arrows


def consistency_report(n: int) -> list:
    """Disagreements between the two endpoint listings of an arrow."""
    issues = []
    labs = family_labels(n, with_c=False)
    lists = {lab: neighbour_lists(n, lab) for lab in labs}
    for lab in labs:
        co, ci = lists[lab]
        for t, m in co.items():
            if t not in lists:
                issues.append(("unknown", lab, t))
                continue
            if lists[t][1][lab] != m:
                issues.append(("out/in", lab, t, m, lists[t][1][lab]))
        for s, m in ci.items():
            if s not in lists:
                issues.append(("unknown", s, lab))
                continue
            if lists[s][0][lab] != m:
                issues.append(("in/out", s, lab, m, lists[s][0][lab]))
    return issues
