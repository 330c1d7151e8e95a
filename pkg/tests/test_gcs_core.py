from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gencluster.double_seed.functions import Context, canonical
from gencluster.double_seed.sampling import sample_point
from gencluster.double_seed.seed import SPECIAL, build_initial_seed, evaluate_seed
from gencluster.gcs_core import (
    EvaluatedSeed,
    Quiver,
    SeedError,
    exchange_value,
    make_seed,
    matrix_from_quiver,
    matrix_mutate,
    mutate_seed,
    quiver_from_matrix,
    seed_to_json,
    string_mutate,
    tau_monomials,
    to_dot,
    y_exponents,
)

Q2_PRINCIPAL = np.array([[0, 2, -2], [-1, 0, 1], [1, -1, 0]], dtype=np.int64)


def test_q2_mutation_example():
    got = matrix_mutate(Q2_PRINCIPAL, 1)
    assert (got == np.array([[0, -2, 0], [1, 0, -1], [0, 1, 0]])).all()


def test_q2_seed_has_the_example_principal_part():
    s = build_initial_seed(2)
    order = [s.index(l) for l in (SPECIAL, ("h", 2, 2), ("g", 2, 2))]
    assert (s.b[np.ix_(order, order)] == Q2_PRINCIPAL).all()


def test_zero_matrix_is_fixed():
    z = np.zeros((3, 5), dtype=np.int64)
    for k in range(3):
        assert not matrix_mutate(z, k).any()


@st.composite
def skew_symmetrizable(draw):
    """``b = D^-1 S`` on the mutable part with ``S`` skew and ``d_i`` dividing row ``i``."""
    N = draw(st.integers(1, 5))
    M = draw(st.integers(0, 3))
    d = [draw(st.integers(1, 3)) for _ in range(N)]
    b = np.zeros((N, N + M), dtype=np.int64)
    for i in range(N):
        for j in range(i + 1, N):
            a = draw(st.integers(-2, 2))
            b[i, j], b[j, i] = a * d[i], -a * d[j]
        for j in range(N, N + M):
            b[i, j] = draw(st.integers(-3, 3))
    return b, d


@given(skew_symmetrizable(), st.data())
def test_involution_and_mod_d(bd, data):
    b, d = bd
    N = b.shape[0]
    k = data.draw(st.integers(0, N - 1))
    b1 = matrix_mutate(b, k)
    assert (matrix_mutate(b1, k) == b).all()
    for i in range(N):
        for j in range(N):
            assert (b1[i, j] - b[i, j]) % d[i] == 0
    seed = make_seed(range(b.shape[1]), N, b1, d)  # stays a valid seed
    assert seed.n_mutable == N


@given(skew_symmetrizable(), st.lists(st.integers(0, 100), max_size=8))
def test_isolated_columns_stay_zero(bd, word):
    b, d = bd
    N, M = b.shape[0], b.shape[1] - b.shape[0]
    b = np.hstack([b, np.zeros((N, 1), dtype=np.int64)])
    for w in word:
        b = matrix_mutate(b, w % N)
    assert not b[:, -1].any()
    assert b.shape[1] == N + M + 1


def test_string_mutation():
    s = build_initial_seed(4)
    k = s.index(SPECIAL)
    assert s.strings[k] == (1, ("c", 1), ("c", 2), ("c", 3), 1)
    flipped = mutate_seed(s, SPECIAL).strings[k]
    assert flipped == (1, ("c", 3), ("c", 2), ("c", 1), 1)
    assert string_mutate(string_mutate(s.strings, k), k) == s.strings
    other = s.index(("g", 2, 2))
    assert string_mutate(s.strings, other) == s.strings


def test_frozen_mutation_is_refused():
    s = build_initial_seed(3)
    with pytest.raises(SeedError):
        mutate_seed(s, ("g", 1, 1))
    with pytest.raises(SeedError):
        tau_monomials(s, ("h", 1, 2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tau_monomials_at_phi11(n):
    s = build_initial_seed(n)
    tm = tau_monomials(s, SPECIAL)
    assert tm.u_gt == {("phi", 2, 1): 1}
    assert tm.u_lt == {("phi", 1, 2): 1}
    assert tm.v_gt[n] == {("h", 1, 1): 1} and tm.v_lt[n] == {("g", 1, 1): 1}
    assert all(tm.v_gt[r] == {} and tm.v_lt[r] == {} for r in range(n))


def test_tau_monomials_zero_row():
    s = make_seed(["a", "b", "z"], 2, [[0, 0, 0], [0, 0, 0]], [2, 1], [(1, 0, 1), None])
    tm = tau_monomials(s, "a")
    assert tm.u_gt == tm.u_lt == {} and all(v == {} for v in tm.v_gt + tm.v_lt)


def test_isolated_vertex_exchanges_to_two_over_x():
    s = make_seed(["a", "z"], 1, [[0, 0]])
    assert exchange_value(s, {"a": Fraction(5), "z": Fraction(3)}, "a") == Fraction(2, 5)


def test_ordinary_row_gives_ordinary_exchange():
    # d = 1: x x' = prod of outgoing + prod of incoming
    s = make_seed(["a", "b", "c", "z"], 3, [[0, 1, -1, 2], [-1, 0, 0, 0], [1, 0, 0, 0]])
    v = {"a": Fraction(2), "b": Fraction(3), "c": Fraction(5), "z": Fraction(7)}
    assert exchange_value(s, v, "a") == (3 * 49 + 5) / Fraction(2)


def test_n2_exchange_at_phi11_against_pencil_expansion():
    # oracle: det(-h22 X + g22 Y) expanded by hand in the basis c_0, c_1, c_2
    X, Y = sample_point(2, 4)
    es = evaluate_seed(build_initial_seed(2), X, Y)
    v = es.values
    g11, g22, h11, h22, c1 = v[("g", 1, 1)], v[("g", 2, 2)], v[("h", 1, 1)], v[("h", 2, 2)], v[("c", 1)]
    want = (g11 * h22 ** 2 + c1 * g22 * h22 + h11 * g22 ** 2) / v[SPECIAL]
    assert exchange_value(es.seed, v, SPECIAL) == want
    assert want * v[SPECIAL] == (Y * g22 - X * h22)[0, 0] * (Y * g22 - X * h22)[1, 1] - \
        (Y * g22 - X * h22)[0, 1] * (Y * g22 - X * h22)[1, 0]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_seed_mutation_involution_everywhere(n):
    seed = build_initial_seed(n)
    # adjacent cluster variables are not among the sampler's genericity checks, so use wide entries
    for t in range(2):
        X, Y = sample_point(n, 11 + t, lo=-99, hi=99)
        es = evaluate_seed(seed, X, Y)
        for k in seed.mutable:
            once = es.mutate(k)
            assert sum(once.values[l] != es.values[l] for l in seed.labels) == 1
            back = once.mutate(k)
            assert back.values == es.values
            assert (back.seed.b == seed.b).all() and back.seed.strings == seed.strings


def test_y_variable_examples():
    n = 5
    s = build_initial_seed(n)
    for i in range(2, n):
        y = y_exponents(s, ("h", i, i))
        want = {("f", 1, n - i): 1, ("h", i - 1, i): 1, ("f", 1, n - i + 1): -1, ("h", i, i + 1): -1}
        assert y == {canonical(n, k): e for k, e in want.items()}
    # two arrows phi21 -> phi12, each counted
    assert y_exponents(s, ("phi", 1, 2))[("phi", 2, 1)] == -2
    assert y_exponents(s, ("phi", 2, 1))[("phi", 1, 2)] == 2
    iso = make_seed(["a", "z"], 1, [[0, 0]])
    assert y_exponents(iso, "a") == {}


def test_quiver_round_trip():
    for n in (2, 3, 4):
        s = build_initial_seed(n)
        q = quiver_from_matrix(s)
        back = matrix_from_quiver(q, s.strings)
        assert back == s and (back.b == s.b).all()
    empty = Quiver((), {})
    assert matrix_from_quiver(empty).b.shape == (0, 0)


def test_quiver_degrees_n4():
    q = quiver_from_matrix(build_initial_seed(4))
    assert q.degree(("phi", 1, 1)) == 4
    assert q.degree(("g", 4, 1)) == 1 and q.degree(("h", 1, 4)) == 1
    assert q.degree(("phi", 2, 2)) == 4  # k, l != 1 on the last diagonal


def test_non_skew_principal_part_is_rejected():
    with pytest.raises(SeedError):
        make_seed(["a", "b"], 2, [[0, 1], [1, 0]])
    with pytest.raises(SeedError):
        make_seed(["a", "b"], 2, [[0, 1], [-1, 0]], [2, 1])


def test_dot_and_json():
    s = build_initial_seed(2)
    dot = to_dot(s)
    assert "hexagon" in dot and "multiplicity=2" in dot and "shape=note" in dot
    doc = seed_to_json(s, str)
    assert doc["schema"].endswith("/1") and len(doc["vertices"]) == len(s.labels)
    assert doc["strings"][s.index(SPECIAL)] == [{}, {"('c', 1)": 1}, {}]


def test_evaluated_seed_keeps_point():
    X, Y = sample_point(3, 2)
    es = evaluate_seed(build_initial_seed(3), X, Y)
    assert isinstance(es, EvaluatedSeed)
    assert es.values[("g", 1, 1)] == Context(X, Y).detX
