import pytest

from qhecke.identities import bailey, hecke
from qhecke.rings import LAURENT, ZZ, specialize_a
from qhecke.series import QSeries, pochhammer, pochhammer_inf, series_equal

a = LAURENT.gen
z = LAURENT.gen


def lq(terms, trunc=None):
    return QSeries.from_dict(terms, LAURENT, trunc)


# -- finite triple products ------------------------------------------------------


def test_macmahon_small_cases():
    lhs, rhs = bailey.macmahon_sides(0, 0)
    assert lhs == rhs == QSeries.one(LAURENT)
    # (1 - zq)(1 - 1/z) = 1 + q - 1/z - zq, expanded by hand
    lhs, rhs = bailey.macmahon_sides(1, 1)
    hand = lq({0: 1 - z**-1, 1: 1 - z})
    assert lhs == hand == rhs
    assert bailey.macmahon_finite_jacobi_check(3, 2)


@pytest.mark.parametrize("M", range(0, 9))
def test_macmahon_grid(M):
    for N in range(0, 9):
        assert bailey.macmahon_finite_jacobi_check(M, N), (M, N)


def test_finite_jacobi_sides():
    for N in range(8):
        lhs, rhs = bailey.finite_jacobi_sides(N)
        assert lhs == rhs


def test_finite_jacobi_a_small():
    assert bailey.finite_jacobi_a(0) == QSeries.one(LAURENT)
    # (1 - aq)(1 - q/a) = 1 - (a + 1/a) q + q^2
    hand = lq({0: 1, 1: -(a + a**-1), 2: 1})
    assert bailey.finite_jacobi_a(1) == hand == bailey.finite_jacobi_product(1)


def test_finite_jacobi_a_at_one():
    f = bailey.finite_jacobi_a(2).map_coeffs(lambda c: specialize_a(c, ZZ, 1), ZZ)
    assert f == pochhammer(1, 1, 2, 2) ** 2


@pytest.mark.parametrize("N", range(0, 13))
def test_finite_jacobi_a(N):
    assert bailey.finite_jacobi_a(N) == bailey.finite_jacobi_product(N)


# -- the Bailey pair ---------------------------------------------------------------


def test_alpha_examples():
    assert bailey.alpha(0) == QSeries.one(LAURENT)
    assert bailey.alpha(1) == lq({1: -(a + a**-1)})
    at_one = bailey.alpha(2).map_coeffs(lambda c: specialize_a(c, ZZ, 1), ZZ)
    assert at_one == QSeries.monomial(4, 2)
    with pytest.raises(ValueError):
        bailey.alpha(-1)


def test_beta_zero():
    assert bailey.beta(0, 30) == QSeries.one(LAURENT, 30)


@pytest.mark.parametrize("N", range(0, 11))
def test_pair_relation(N):
    assert bailey.JACOBI_PAIR.check(N, 60)


@pytest.mark.parametrize("N", range(0, 13))
def test_pair_relation_cleared(N):
    lhs, rhs = bailey.bailey_relation_cleared(N)
    assert lhs.is_exact and rhs.is_exact
    assert lhs == rhs


def test_cleared_relation_at_one_is_finite_jacobi():
    lhs, rhs = bailey.bailey_relation_cleared(1)
    assert rhs == bailey.finite_jacobi_a(1)


# -- the conjugate pair -------------------------------------------------------------


def test_delta_examples():
    d0 = bailey.delta(0, 40)
    assert d0[0] == 1
    assert d0 == pochhammer_inf(1, 4, 4, 40)
    assert bailey.delta(1, 40).valuation == 2


def test_gamma_examples():
    g0 = bailey.gamma_closed(0, 40)
    assert g0.truncate(10) == QSeries.from_dict({0: 1, 2: 1}, ZZ, 10)
    assert bailey.gamma_tail(0, 40)[0] == 1
    assert bailey.gamma_tail(1, 40).valuation == 2
    for R in range(6):
        assert bailey.gamma_closed(R, 60).valuation == 2 * R


@pytest.mark.parametrize("R", range(0, 11))
def test_gamma_routes_agree(R):
    closed = bailey.gamma_closed(R, 100)
    assert series_equal(bailey.gamma_tail(R, 100), closed, 100)
    assert series_equal(bailey.gamma_ksum(R, 100), closed, 100)


def test_conjugate_pair_check():
    for R in range(5):
        assert bailey.HECKE_CONJUGATE.check(R, 60)


def test_transform_sides_equal_P_a():
    lhs, rhs = bailey.bailey_transform(
        bailey.JACOBI_PAIR, bailey.HECKE_CONJUGATE, 40, alpha_lowest=lambda R: R * R
    )
    P = hecke.build_P_a(40)
    assert series_equal(lhs, P, 40)
    assert series_equal(rhs, P, 40)


# -- master sum and its parity pieces --------------------------------------------------


@pytest.fixture(scope="module")
def master():
    return bailey.master_sum(100)


def test_master_equals_P_a(master):
    assert series_equal(master, hecke.build_P_a(100), 100)


def test_master_h_zero_term():
    # below q^3 only the h = 0 term gamma_0 contributes
    assert bailey.master_sum(3) == bailey.gamma_closed(0, 3).change_ring(LAURENT)


def test_parity_split(master):
    assert series_equal(bailey.even_first(100), master.sieve(2, 0), 100)
    assert series_equal(bailey.odd_first(100), master.sieve(2, 1), 100)


def test_er_tail_examples():
    lhs, rhs = bailey.even_partial_tail(0, 80)
    assert lhs == rhs == bailey.gamma_closed(0, 80)
    for r in (1, 3):
        lhs, rhs = bailey.even_partial_tail(r, 80)
        assert series_equal(lhs, rhs, 80)
    with pytest.raises(ValueError):
        bailey.even_partial_tail(-1, 10)

