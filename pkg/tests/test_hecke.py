import pytest
import sympy

from qhecke.identities import hecke
from qhecke.rings import GAUSS, LAURENT, PRIM3, PRIM6, ZZ, LaurentA, invert_a, negate_a, specialize_a
from qhecke.series import QSeries, pochhammer_inf, series_equal

a = LAURENT.gen
ORDER = 60


def specialize(f, ring, image):
    return f.map_coeffs(lambda c: specialize_a(c, ring, image), ring)


@pytest.fixture(scope="module")
def S_a():
    return hecke.build_S_a(ORDER)


@pytest.fixture(scope="module")
def P_a():
    return hecke.build_P_a(ORDER)


def sympy_S(n):
    """S(q) at a = 1 summed term by term in sympy, as exact rationals, to O(q^n)."""
    x = sympy.Symbol("q")
    total = 0
    for m in range((n + 1) // 2 + 1):
        num = sympy.prod([(1 - x ** (2 * k + 1)) ** 2 for k in range(m)])
        den = sympy.prod([1 + x ** (2 * k + 2) for k in range(m)])
        total += num * x ** (2 * m) / den
    ser = sympy.series(total, x, 0, n).removeO()
    return [int(ser.coeff(x, k)) for k in range(n)]


def test_S_a_low_terms(S_a):
    assert S_a[0] == 1
    assert S_a[1] == 0
    assert S_a.trunc == ORDER


def test_S_at_one_against_sympy():
    S = hecke.build_S(8, 1)
    assert S.coefficient_list(0, 8) == sympy_S(8)
    assert S.coefficient_list(0, 4) == [1, 0, 1, -2]


def test_P1_q4_against_sympy():
    x = sympy.Symbol("q")
    S = sum(c * x**k for k, c in enumerate(sympy_S(9)))
    prod = sympy.expand(S * (1 - x**4) * (1 - x**8))
    assert hecke.build_P(9, 1)[4] == int(prod.coeff(x, 4))


def test_P_a_constant_term(P_a):
    assert P_a[0] == 1


@pytest.mark.parametrize(
    "ring, image",
    [(ZZ, 1), (ZZ, -1), (GAUSS, GAUSS.gen), (PRIM6, PRIM6.gen), (PRIM3, PRIM3.gen), (PRIM6, -PRIM6.gen)],
)
def test_specialize_commutes_with_build(P_a, ring, image):
    assert specialize(P_a, ring, image) == hecke.build_P(ORDER, image)


def test_T_U_V_are_specializations(S_a):
    assert specialize(S_a, GAUSS, GAUSS.gen) == hecke.build_T(ORDER).change_ring(GAUSS)
    assert specialize(S_a, PRIM6, PRIM6.gen) == hecke.build_U(ORDER).change_ring(PRIM6)
    assert specialize(S_a, PRIM3, PRIM3.gen) == hecke.build_V(ORDER).change_ring(PRIM3)


def test_T_U_V_constant_terms():
    for build in (hecke.build_T, hecke.build_U, hecke.build_V):
        assert build(10)[0] == 1


def test_invert_a_symmetry(P_a):
    assert P_a.map_coeffs(invert_a) == P_a


def test_negate_a_symmetry(P_a):
    assert P_a.map_coeffs(negate_a) == P_a.subs_neg_q()


# -- right-hand sides -----------------------------------------------------------


def test_rhs_even_low_terms():
    f = hecke.rhs_even(10)
    assert f[0] == 1
    assert f.truncate(8) == QSeries.from_dict({0: 1, 2: 1}, LAURENT, 8) + QSeries.from_dict(
        {8: -a**-2 - a**2}, LAURENT, 8
    )


def test_rhs_odd_low_terms():
    f = hecke.rhs_odd(9)
    assert f.valuation == 3
    t = -(a + a**-1)
    # n = 1 starts at 6+10+3-4 = 15, so below q^9 only the n = 0 part survives
    assert f == QSeries.from_dict({3: t, 7: t}, LAURENT, 9)


def test_theorem_at_small_order(P_a):
    assert series_equal(P_a.sieve(2, 0), hecke.rhs_even(50), 50)
    assert series_equal(P_a.sieve(2, 1), hecke.rhs_odd(50), 50)


@pytest.mark.parametrize(
    "ring, image, even, odd",
    [
        (ZZ, 1, "even-main", "odd-main"),
        (GAUSS, GAUSS.gen, "i-companion", None),
        (PRIM6, PRIM6.gen, "rho-even", "rho-odd"),
        (PRIM3, PRIM3.gen, "omega-even", "omega-odd"),
    ],
)
def test_specialization_coherence(ring, image, even, odd):
    ev = specialize(hecke.rhs_even(ORDER), ring, image)
    od = specialize(hecke.rhs_odd(ORDER), ring, image)
    assert ev == hecke.rhs_corollary(even, ORDER).change_ring(ring)
    if odd is None:
        assert od.is_zero()
    else:
        assert od == hecke.rhs_corollary(odd, ORDER).change_ring(ring)


def test_even_main_is_a_equals_one():
    assert specialize(hecke.rhs_even(80), ZZ, 1) == hecke.rhs_corollary("even-main", 80)


def test_corollaries_against_builders():
    n = 100
    P1 = hecke.build_P(n, 1)
    assert P1.sieve(2, 0) == hecke.rhs_corollary("even-main", n)
    assert P1.sieve(2, 1) == hecke.rhs_corollary("odd-main", n)
    assert P1.sieve(4, 1).is_zero()
    T4 = hecke.with_q4_product(hecke.build_T(n), n)
    assert T4.sieve(2, 1).is_zero()
    U4 = hecke.with_q4_product(hecke.build_U(n), n)
    assert U4.sieve(2, 1) == hecke.rhs_corollary("rho-odd", n)


def test_rhs_corollary_unknown():
    with pytest.raises(KeyError):
        hecke.rhs_corollary("nope", 10)


def test_cos_weight():
    assert hecke.cos_weight(0) == 2
    assert hecke.cos_weight(3) == -2
    assert hecke.cos_weight(-1) == 1
    assert hecke.cos_weight(100) == -1
    assert [hecke.cos_weight(r) for r in range(6)] == [2, 1, -1, -2, -1, 1]


def test_cos_weight_is_trace_of_rho_power():
    rho = PRIM6.gen
    for r in range(-12, 13):
        assert PRIM6.from_int(hecke.cos_weight(r)) == rho**r + rho**-r


def test_build_S_over_laurent_matches_direct_terms():
    # sum the defining terms one by one, each as a product/quotient of series
    n = 24
    total = QSeries.zero(LAURENT, n)
    for m in range(n // 2 + 1):
        num = QSeries.one(LAURENT, n)
        den = QSeries.one(LAURENT)
        for k in range(m):
            num = num * QSeries.from_dict({0: 1, 2 * k + 1: -a}, LAURENT)
            num = num * QSeries.from_dict({0: 1, 2 * k + 1: -LaurentA.monomial(-1)}, LAURENT)
            den = den * QSeries.from_dict({0: 1, 2 * k + 2: 1}, LAURENT)
        total = total + (num / den).shift(2 * m).truncate(n)
    assert hecke.build_S_a(n) == total


def test_q4_product_factor():
    f = hecke.with_q4_product(QSeries.one(ZZ, 20), 20)
    assert f == pochhammer_inf(1, 4, 4, 20)
