from fractions import Fraction

import numpy as np
import pytest

from gencluster import identities as ids
from gencluster.double_seed.functions import Context, phi_tilde
from gencluster.double_seed.sampling import sample_point, sample_points
from gencluster.exact_core import det, identity, zeros
from gencluster.fixtures import p_matrix, p_poly


@pytest.mark.parametrize("n", [3, 4, 5])
def test_plucker_suite(n):
    rep = ids.check_plucker_suite(n, sample_points(n, 3, 0))
    assert rep.results and rep.passed, rep.first_failure


def test_hii_relations_n4():
    rep = ids.check_plucker_suite(4, sample_points(4, 3, 1), names=["hii"])
    assert [r[1] for r in rep.results] and rep.passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relations_fail_when_perturbed(n):
    rels = ids.plucker_relations(n)
    bad = [ids.Relation(r.name, r.index, lambda c, f=r.lhs: -f(c) if r.mode == "exact" else 2 * f(c), r.rhs, r.mode)
           for r in rels]
    rep = ids.check_relations("perturbed", n, bad, sample_points(n, 2, 0))
    assert all(not r[2] for r in rep.results)


def test_up_to_sign_is_point_constant():
    n = 4
    pts = sample_points(n, 3, 2)
    for r in ids.plucker_relations(n):
        if r.mode != "sign":
            continue
        ratios = {r.lhs(Context(X, Y)) / r.rhs(Context(X, Y)) for X, Y in pts}
        assert len(ratios) == 1 and ratios <= {1, -1}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_phi11_exchange(n):
    assert ids.check_phi11_exchange(n, sample_points(n, 3, 0)).passed


def test_phi11_symbolic_n2_matches_printed_quotient():
    res = ids.phi11_symbolic(2)
    assert res["matches_printed"]


def test_phi11_symbolic_n3_divides():
    res = ids.phi11_symbolic(3)
    assert res["terms"] > 0


def test_exchange_partners():
    for n in (3, 4):
        assert ids.check_exchange_partners(n, sample_points(n, 2, 5)).passed


def test_invariance():
    for n in (2, 3, 4):
        assert ids.check_invariance(n, sample_points(n, 2, 0), rng_seed=3).passed


def test_canonical_forms_and_fixtures():
    for n in (3, 4, 5):
        assert ids.check_canonical_forms(n, sample_points(n, 2, 0)).passed
        assert ids.check_fixture_evaluations(n).passed


def test_p_polynomial_matches_its_determinant():
    for m in range(1, 6):
        for z, t in ((Fraction(2), Fraction(3)), (Fraction(-1, 2), Fraction(5, 3))):
            assert p_poly(m, z, t) == det(p_matrix(m, z, t))


def test_long_identity_small_case():
    A = np.array([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]], dtype=object)
    u = np.array([Fraction(1), Fraction(1)], dtype=object)
    lhs, rhs, _ = ids.long_identity_sides(A, u, u)
    assert lhs == rhs == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_long_identity_random(n):
    assert ids.check_long_identity(n, 10, rng_seed=1).passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_long_identity_specializes_to_phi(n):
    X, Y = sample_point(n, 2)
    U = Context(X, Y).U
    u = zeros(n, 1)[:, 0]
    v = zeros(n, 1)[:, 0]
    u[n - 1] = v[n - 2] = Fraction(1)
    ks = ids.krylov_columns(U, u, n)
    col = lambda w: w.reshape(n, 1)
    K = np.hstack([col(w) for w in ks])
    K1 = np.hstack([col(v)] + [col(w) for w in ks[: n - 1]])
    K2 = np.hstack([col(U.dot(v))] + [col(w) for w in ks[: n - 1]])
    assert det(K) == phi_tilde(U, 1, 1)
    assert det(K1) == phi_tilde(U, 2, 1) and det(K2) == -phi_tilde(U, 1, 2)
    lhs, rhs, _ = ids.long_identity_sides(U, u, v)
    assert lhs == det(U * phi_tilde(U, 2, 1) + identity(n) * phi_tilde(U, 1, 2)) == rhs
