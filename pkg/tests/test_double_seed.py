from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import as_matrix
from gencluster.double_seed.dual import build_dual_seed, evaluate_dual
from gencluster.double_seed.functions import (
    Context,
    Phi_matrix,
    c_coeffs,
    charpoly_sign,
    evaluate,
    family_labels,
    psi_value,
    sign_s,
)
from gencluster.double_seed.quiver import consistency_report, quiver_arrows
from gencluster.double_seed.sampling import is_generic, sample_point
from gencluster.double_seed.seed import SPECIAL, build_initial_seed, evaluate_seed
from gencluster.double_seed.weights import delta, numeric_weights, toric_weights
from gencluster.exact_core import det, identity
from gencluster.gcs_core import exchange_terms, quiver_from_matrix
from gencluster.seed_checks import (
    b_tilde_one,
    check_rank_and_isolated,
    check_toric_annihilation,
    check_torus_action,
)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_counts(n):
    labs = family_labels(n, with_c=False)
    assert len(labs) == 2 * n * n - n + 1
    s = build_initial_seed(n)
    assert s.n_mutable == 2 * n * n - 3 * n + 1
    assert len(s.stable) == 3 * n - 1
    assert sum(s.is_isolated(l) for l in s.stable) == n - 1
    assert [s.d[i] for i in range(s.n_mutable) if s.d[i] != 1] == [n]


def test_n2_seed():
    s = build_initial_seed(2)
    assert set(s.mutable) == {("g", 2, 2), ("h", 2, 2), SPECIAL}
    assert len([l for l in s.labels if l[0] != "c"]) == 7


def test_bad_n():
    with pytest.raises(ValueError):
        build_initial_seed(1)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_quiver_listings_agree(n):
    # only two known gaps: an arrow between two frozen vertices, and the g11 -> g22 arrow
    # that appears in the listing of g22 only
    assert consistency_report(n) == [
        ("out/in", ("g", 1, 1), ("g", 2, 1), 1, 0),
        ("in/out", ("g", 1, 1), ("g", 2, 2), 1, 0),
    ]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_sign_examples(n):
    for l in range(1, n):
        assert sign_s(n, n - l, l) == 1
        if n - l - 1 >= 1:
            assert sign_s(n, n - l - 1, l) == ((-1) ** l if n % 2 else (-1) ** (l + 1))
        if n % 2 and n - l - 2 >= 1:
            assert sign_s(n, n - l - 2, l) == -1
        if n % 2 and n - l - 3 >= 1:
            assert sign_s(n, n - l - 3, l) == (-1) ** (l + 1)


def test_sign_periodicity():
    for n in range(3, 12):
        for k in range(1, n):
            for l in range(1, n - k + 1):
                p = 4 if n % 2 else 2
                if k + p + l <= n:
                    assert sign_s(n, k + p, l) == sign_s(n, k, l) or sign_s(n, k, l + p) == sign_s(n, k, l)


def test_c_coeffs_identity_n2():
    I = identity(2)
    assert c_coeffs(I, I) == [1, -2, 1]


def pair(n_max=4):
    return st.integers(2, n_max).flatmap(lambda n: st.tuples(
        st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n),
    )).map(lambda p: (as_matrix(p[0]), as_matrix(p[1])))


@given(pair())
def test_pencil_expansion(XY):
    X, Y = XY
    n = X.shape[0]
    c = c_coeffs(X, Y)
    assert c[0] == det(X) and c[n] == det(Y)
    lam = Fraction(7, 3)
    assert det(X + Y * lam) == sum(lam ** i * charpoly_sign(n, i) * c[i] for i in range(n + 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_diagonal_vanishing(n):
    X, _ = sample_point(n, 3)
    ctx = Context(X, X)
    for lab in family_labels(n, with_c=False):
        v = evaluate(lab, ctx)
        if lab[0] in ("f", "phi"):
            assert v == 0
    for i in range(1, n + 1):
        assert evaluate(("g", i, i), ctx) == evaluate(("h", i, i), ctx)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_phi_is_polynomial_at_integer_points(n):
    X, Y = sample_point(n, 8)
    ctx = Context(X, Y)
    for k in range(1, n):
        for l in range(1, n - k + 1):
            assert evaluate(("phi", k, l), ctx).denominator == 1


def test_sample_point_is_deterministic_and_generic():
    X1, Y1 = sample_point(4, 21)
    X2, Y2 = sample_point(4, 21)
    assert (X1 == X2).all() and (Y1 == Y2).all()
    assert det(X1) != 0 and is_generic(X1, Y1)
    es = evaluate_seed(build_initial_seed(4), X1, Y1)
    assert len(es.values) == 32 and all(v != 0 for v in es.values.values())


@pytest.mark.parametrize("n", [3, 4, 5])
def test_phi11_exchange_polynomial(n):
    s = build_initial_seed(n)
    X, Y = sample_point(n, 5)
    v = evaluate_seed(s, X, Y).values
    terms = exchange_terms(s, v, s.index(SPECIAL))
    c = [v[("g", 1, 1)]] + [v[("c", r)] for r in range(1, n)] + [v[("h", 1, 1)]]
    p21, p12 = v[("phi", 2, 1)], v[("phi", 1, 2)]
    assert sum(terms) == sum(c[r] * p21 ** r * p12 ** (n - r) for r in range(n + 1))


def test_vertex_degrees_n4():
    q = quiver_from_matrix(build_initial_seed(4))
    assert q.degree(SPECIAL) == 4 and q.degree(("g", 4, 1)) == 1 and q.degree(("h", 1, 4)) == 1
    assert q.degree(("phi", 1, 2)) == 6 and q.degree(("phi", 3, 1)) == 5 and q.degree(("phi", 1, 3)) == 5


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_rank_and_isolated_block(n):
    rep = check_rank_and_isolated(n)
    assert rep.passed, rep.results
    assert (b_tilde_one(build_initial_seed(n)) == np.eye(n - 1, dtype=np.int64)).all()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_toric_annihilation(n):
    assert check_toric_annihilation(n).passed


def test_weight_examples():
    n = 5
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            assert toric_weights(n, ("g", i, j))[1] == delta(n, i, n)
    for k in range(1, n):
        for l in range(1, n - k + 1):
            assert toric_weights(n, ("phi", k, l))[1] == (n - k - l + 1,) * n


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weights_by_direct_scaling(n):
    X, Y = sample_point(n, 2)
    assert check_torus_action(n, [(X, Y)], rng_seed=n).passed


def test_weights_by_euler_fields():
    n = 3
    X, Y = sample_point(n, 6)
    labs = family_labels(n, with_c=False)
    got = numeric_weights(labs, X, Y)
    for lab in labs:
        wl, wr = toric_weights(n, lab)
        assert got[lab] == (tuple(map(Fraction, wl)), tuple(map(Fraction, wr)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dual_seed_shape(n):
    d = build_dual_seed(n)
    assert set(d.stable) == {("h", i, i) for i in range(1, n + 1)} | {("c", i) for i in range(1, n)}
    # subquiver oracle: restrict the arrow multiset of Q_n
    keep = set(d.labels)
    want = {(s, t): m for (s, t), m in quiver_arrows(n).items() if s in keep and t in keep}
    got = quiver_from_matrix(d).arrows
    mixed = {k: v for k, v in want.items() if k[0] in d.mutable or k[1] in d.mutable}
    assert got == mixed


def test_dual_psi_is_signed_phi():
    n = 4
    X, Y = sample_point(n, 1)
    U = Context(X, Y).U
    vals = evaluate_dual(n, build_dual_seed(n).labels, U)
    for k in range(1, n):
        for l in range(1, n - k + 1):
            assert vals[("phi", k, l)] == sign_s(n, k, l) * det(Phi_matrix(U, k, l)) == psi_value(U, k, l)
    assert vals[("h", 1, 1)] == det(U)
