"""Acceptance criteria 1 to 12, one test each.

Every test prints a single ``criterion k: PASS|FAIL`` line straight to the
terminal, so the lines show up in ``pytest -v`` output without ``-s``.
Run ``python tests/test_acceptance.py`` for just the twelve lines.
"""

import time

import pytest

from gencluster import identities as ids
from gencluster import mutation_walks as mw
from gencluster import poisson as ps
from gencluster.double_seed.dual import build_dual_seed
from gencluster.double_seed.sampling import sample_points
from gencluster.double_seed.seed import build_initial_seed
from gencluster.normal_form_checks import check_round_trips
from gencluster.seed_checks import check_rank_and_isolated, check_toric_annihilation, check_torus_action
from gencluster.suites import run_suite

# size of the cluster complex of type B3, from an independent count (cyclohedron W_3)
B3_CLUSTERS = 20


def _n_pairs(n):
    m = 2 * n * n - n + 1
    return m * (m - 1) // 2


def c1():
    out = []
    for n in (2, 3, 4):
        rep = ps.verify_log_canonical(n, sample_points(n, 3), "D")
        m = len(rep.labels)
        out.append((f"n={n}", rep.passed and m * (m - 1) // 2 >= _n_pairs(n)))
    return out


def c2():
    out = []
    for n in (2, 3, 4):
        lc = ps.verify_log_canonical(n, sample_points(n, 3), "D")
        rep = ps.verify_compatibility(build_initial_seed(n), lc.details["omega_matrix"])
        out.append((f"n={n}", lc.passed and rep.passed))
    return out


def c3():
    out = []
    for n in (2, 3):
        lc = ps.verify_log_canonical(n, sample_points(n, 3), "star")
        rep = ps.verify_compatibility(build_dual_seed(n), lc.details["omega_matrix"])
        out.append((f"n={n}", lc.passed and rep.passed))
    return out


def c4():
    return [(f"n={n}", check_rank_and_isolated(n).passed) for n in range(2, 6)]


def c5():
    return [(f"n={n}", check_toric_annihilation(n).passed
             and check_torus_action(n, sample_points(n, 2), rng_seed=n).passed) for n in range(2, 6)]


def c6():
    out = [(f"numeric n={n}", ids.check_phi11_exchange(n, sample_points(n, 3)).passed) for n in (3, 4, 5)]
    for n in (2, 3):
        try:
            res = ids.phi11_symbolic(n)
            out.append((f"symbolic n={n}", res.get("matches_printed", True)))
        except ids.PolyDivisionError:
            out.append((f"symbolic n={n}", False))
    return out


def c7():
    out = []
    for n in (3, 4, 5):
        pts = sample_points(n, 3)
        out.append((f"relations n={n}", ids.check_plucker_suite(n, pts).passed
                    and ids.check_exchange_partners(n, pts).passed))
        out.append((f"fixtures n={n}", ids.check_fixture_evaluations(n).passed))
    return out


def c8():
    out = [(f"round trips n={n}", check_round_trips(n, 100).passed) for n in range(2, 6)]
    pts = sample_points(3, 3)
    out.append(("Zmap n=3", ps.verify_zmap_poisson(3, pts).passed))
    out.append(("PoissonB n=3", ps.verify_poisson_b(3, pts).passed))
    return out


def c9():
    return [(f"n={n}", ids.check_long_identity(n, 10, rng_seed=n).passed) for n in range(2, 6)]


def c10():
    out = [(f"all x n={n}", mw.verify_all_x_recovered(n, mw.walk_points(n, 2)).passed) for n in (3, 4)]
    for n in (3, 4, 5):
        pts = mw.walk_points(n, 2, rng_seed=1)
        out.append((f"S n={n}", mw.check_S(n, pts).passed and mw.check_S(n, pts, order_seed=3).passed))
    return out


def c11():
    out = [("oracle", mw.b3_cluster_count() == B3_CLUSTERS)]
    for k in (0, 1):
        g = mw.enumerate_exchange_graph_n2(k)
        out.append((f"locator {k}", g.vertices == B3_CLUSTERS and g.degrees == {3: g.vertices}))
    return out


def c12():
    out = []
    for n in (2, 3, 4):
        checks = run_suite("negative-controls", n, points=2)
        out.append((f"n={n} ({len(checks)} controls)", bool(checks) and all(c.passed for c in checks)))
    return out


CRITERIA = {
    1: ("log-canonicity of the initial family", c1),
    2: ("compatibility with the exchange matrix", c2),
    3: ("dual family log-canonical and compatible", c3),
    4: ("rank and isolated block", c4),
    5: ("torus weights and p-hat invariance", c5),
    6: ("phi_11 exchange relation", c6),
    7: ("determinantal relations and fixtures", c7),
    8: ("normal forms and Poisson maps", c8),
    9: ("long identity", c9),
    10: ("mutation sequences", c10),
    11: ("n=2 finite type", c11),
    12: ("negative controls", c12),
}


def evaluate(k):
    title, fn = CRITERIA[k]
    t = time.time()
    parts = fn()
    ok = bool(parts) and all(p for _, p in parts)
    bad = [name for name, p in parts if not p]
    line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{time.time() - t:.1f}s]"
    if bad:
        line += "  failing: " + ", ".join(bad)
    return ok, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line = evaluate(k)
    with capsys.disabled():
        print("\n" + line, end=" ")
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [evaluate(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
