import json
import random

import pytest

from gencluster import mutation_walks as mw
from gencluster.double_seed.sampling import sample_point, sample_points
from gencluster.double_seed.seed import build_initial_seed, evaluate_seed

# clusters of a type B3 cluster algebra (cyclohedron vertices), frozen from the BFS oracle
B3_CLUSTERS = 20


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sequence_S(n):
    rep = mw.check_S(n, sample_points(n, 2, 0))
    assert rep.passed, rep.first_failure
    names = {r[0] for r in rep.results}
    assert {"chi", "chi_top_row", "final_value", "strings_unchanged", "subquiver_matches_dual",
            "attachment", "reverse_restores", "S_commuting"} <= names


@pytest.mark.parametrize("n", [3, 4])
def test_sequence_S_random_orders(n):
    for order_seed in (1, 2):
        assert mw.check_S(n, sample_points(n, 1, 3), order_seed=order_seed).passed


def test_S_corrupted_start_fails():
    first = mw.s_word(3)[0]
    rep = mw.check_S(3, sample_points(3, 1, 0), corrupt={first: lambda v: 2 * v})
    assert not rep.passed


def test_stage_closed_forms():
    n = 4
    X, Y = sample_point(n, 1)
    for m in range(2, n + 1):
        for j in range(n):
            # first new value of a stage is an entry of X; for j = 0 it is the h-vertex, x_{m-1,n}
            assert mw.gamma_new_value(X, Y, m, j, 1) == X[m - 2, n - j - 1]


@pytest.mark.parametrize("n", [3, 4])
def test_all_x_recovered(n):
    rep = mw.verify_all_x_recovered(n, sample_points(n, 2, 0), order_seed=7)
    assert rep.passed, rep.first_failure
    assert sum(r[0] == "x_recovered" for r in rep.results) == 3


def test_all_x_recovered_second_locator():
    assert mw.verify_all_x_recovered(3, sample_points(3, 1, 9), rng_seed=5).passed


def test_bottom_row_in_initial_cluster():
    n = 4
    X, Y = sample_point(n, 3)
    vals = set(map(abs, evaluate_seed(build_initial_seed(n), X, Y).values.values()))
    assert all(abs(X[n - 1, j]) in vals for j in range(n))


def test_gamma_walk_corrupted_fails():
    rep = mw.verify_all_x_recovered(3, sample_points(3, 1, 0), corrupt={("g", 3, 2): lambda v: 2 * v})
    assert not rep.passed


def test_b3_oracle():
    assert mw.b3_cluster_count() == B3_CLUSTERS


@pytest.mark.parametrize("rng_seed", [0, 1])
def test_exchange_graph_n2(rng_seed):
    g = mw.enumerate_exchange_graph_n2(rng_seed)
    assert g.vertices == B3_CLUSTERS
    assert g.degrees == {3: g.vertices} and g.edges == 3 * g.vertices // 2


def test_exchange_graph_keys_agree():
    a = mw.enumerate_exchange_graph_n2(0)
    b = mw.enumerate_exchange_graph_n2(0, by_cluster=True)
    assert a.to_json() == b.to_json()


def test_transcripts_are_deterministic():
    a, b = mw.transcript_json(3, 4), mw.transcript_json(3, 4)
    assert a == b
    doc = json.loads(a)
    assert doc["n"] == 3 and len(doc["steps"]) == len(mw.s_word(3))


def test_walk_values_nonzero():
    n = 4
    X, Y = sample_point(n, 6)
    es = evaluate_seed(build_initial_seed(n), X, Y)
    rng = random.Random(0)
    for _ in range(30):
        es = es.mutate(rng.choice(es.seed.mutable))
        assert all(v != 0 for v in es.values.values())
