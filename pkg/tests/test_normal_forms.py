from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import as_matrix
from gencluster.double_seed.functions import Context
from gencluster.double_seed.sampling import sample_point, sample_points
from gencluster.exact_core import (
    GenericityError,
    antidiagonal,
    charpoly_coeffs,
    cyclic_shift,
    det,
    equal,
    identity,
    inverse,
)
from gencluster.normal_form_checks import check_formulas, round_trips
from gencluster.normal_forms import (
    bc_form,
    bw_form,
    companion_reduce,
    first_row_companion,
    first_row_from_spectrum,
    gauss,
    hessenberg_conjugator,
    hessenberg_first_row,
    last_column_companion,
    nmn_form,
    nmn_pattern_ok,
    toeplitz_upper,
    unit_subdiagonal_scaling,
)


def test_gauss_examples():
    P, D, L = gauss(as_matrix([[3, 2], [4, 2]]))
    assert (P == as_matrix([[1, 1], [0, 1]])).all()
    assert (D == as_matrix([[-1, 0], [0, 2]])).all()
    assert (L == as_matrix([[1, 0], [2, 1]])).all()
    I = identity(3)
    assert all((F == I).all() for F in gauss(I))


def test_gauss_zero_pivot():
    with pytest.raises(GenericityError):
        gauss(as_matrix([[1, 2], [3, 0]]))


@given(st.integers(2, 5), st.integers(0, 10 ** 6))
def test_round_trips_hypothesis(n, seed):
    X, Y = sample_point(n, seed)
    U = Context(X, Y).U
    res = round_trips(U)
    assert all(res.values()), res
    P, D, L = gauss(U)
    assert det(D) == det(U)


def test_bc_form_of_a_bc_matrix():
    n = 4
    B = as_matrix([[2, 1, 0, 3], [0, -1, 2, 1], [0, 0, 3, 5], [0, 0, 0, 7]])
    Nm, Bp = bc_form(B.dot(cyclic_shift(n)))
    assert equal(Nm, identity(n)) and equal(Bp, B)


def test_bw_form_of_a_bw_matrix():
    n = 3
    B = as_matrix([[2, 1, 4], [0, -1, 2], [0, 0, 3]])
    Nm, Bp = bw_form(B.dot(antidiagonal(n)))
    assert equal(Nm, identity(n)) and equal(Bp, B)


def test_nmn_with_vanishing_corner():
    X, Y = sample_point(4, 2)
    U = Context(X, Y).U
    U[0, 3] = Fraction(0)
    nu, Nm, M = nmn_form(U)
    assert nu == 0 and nmn_pattern_ok(M)


def test_companion_fixed_point():
    c = [Fraction(1), Fraction(3), Fraction(-2), Fraction(5)]
    C = first_row_companion(c)
    Np, D, Ms = companion_reduce(C)
    assert equal(D, identity(3)) and equal(Np, identity(3)) and equal(Ms, C)
    assert charpoly_coeffs(C) == c


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_formulas(n):
    rep = check_formulas(n, sample_points(n, 2, 3))
    assert rep.passed, rep.first_failure


def test_gamma_convention_alternative_fails():
    # reading the c's at (1, U) with index n - i does not give the top row
    from gencluster.double_seed.functions import c_coeffs, charpoly_sign
    n = 4
    X, Y = sample_point(n, 1)
    U = Context(X, Y).U
    Nm, Bp = bc_form(U)
    H = Bp.dot(cyclic_shift(n))
    D = unit_subdiagonal_scaling(H, Fraction(1) / det(U))
    _, _, Ms = companion_reduce(H, D)
    c1 = c_coeffs(identity(n), U)
    ratios = {Ms[0, i - 1] / ((-1) ** (i - 1) * charpoly_sign(n, n - i) * c1[n - i]) for i in range(1, n + 1)}
    assert ratios != {1} and ratios != {-1}


def test_first_row_from_spectrum():
    A = as_matrix([[2, -1, 0, 3], [1, 4, 2, -2], [0, 5, -3, 1], [2, 0, 1, 6]])
    assert list(first_row_from_spectrum(A[1:, :], charpoly_coeffs(A))) == list(A[0, :])
    c = [Fraction(1), Fraction(-3), Fraction(4), Fraction(2)]
    C = first_row_companion(c)
    assert list(first_row_from_spectrum(C[1:, :], c)) == list(C[0, :])
    # the alternative companion is the anti-transpose, and the Toeplitz matrix conjugates it back
    T = toeplitz_upper(c)
    W = antidiagonal(3)
    Lc = last_column_companion(c)
    assert equal(Lc, W.dot(C.T).dot(W))
    assert equal(inverse(T).dot(Lc).dot(T), C)


def test_hessenberg_row_two_paths():
    H = as_matrix([[2, 3, -1, 4], [1, 5, 2, 0], [0, 1, -2, 7], [0, 0, 1, 3]])
    row = hessenberg_first_row(H)
    ref = first_row_companion(charpoly_coeffs(H[1:, 1:]))[0, :]
    assert list(row) == list(ref)
    N = hessenberg_conjugator(H)
    assert equal(inverse(N).dot(H).dot(N), first_row_companion(charpoly_coeffs(H)))


def test_hessenberg_n2():
    H = as_matrix([[4, 9], [1, -2]])
    assert list(hessenberg_first_row(H)) == [H[1, 1]]


def test_negative_control_round_trip():
    X, Y = sample_point(3, 0)
    U = Context(X, Y).U
    P, D, L = gauss(U)
    D[1, 1] += 1
    assert not equal(P.dot(D).dot(L), U)
