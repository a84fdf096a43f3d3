"""Bailey pairs, conjugate Bailey pairs, and the concrete pair behind P_a(q).

The pair used for P_a lives at base q^2:

* alpha_R(a) = (-1)^R q^(R^2) (a^R + a^-R) for R >= 1, alpha_0 = 1;
* beta_N(a)  = (aq;q^2)_N (q/a;q^2)_N / (q^2;q^2)_(2N);
* delta_N    = (q^4;q^4)_inf q^(2N) (q^2;q^2)_(2N) / (-q^2;q^2)_N;
* gamma_R    = q^(2R) sum_s (-1)^s q^(6s^2+(6R+4)s) (1 + q^(2R+4s+2)).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Callable

from ..rings import LAURENT, ZZ, LaurentA, Ring
from ..series import (
    Comparison,
    QSeries,
    exact_quotient,
    pochhammer,
    pochhammer_inf,
    qbinom,
    series_equal,
    sign,
    truncated_sum,
)

__all__ = [
    "BaileyPair",
    "ConjugatePair",
    "bailey_transform",
    "macmahon_sides",
    "macmahon_finite_jacobi_check",
    "finite_jacobi_sides",
    "finite_jacobi_a",
    "finite_jacobi_product",
    "alpha",
    "beta",
    "bailey_relation_cleared",
    "delta",
    "gamma_tail",
    "gamma_ksum",
    "gamma_closed",
    "master_sum",
    "even_first",
    "odd_first",
    "even_partial_tail",
    "JACOBI_PAIR",
    "HECKE_CONJUGATE",
]


def _binomial(ring: Ring, exp: int, c=1) -> QSeries:
    """``1 - c q^exp``"""
    return QSeries.from_dict({0: 1, exp: -c}, ring)


def _div_qfactorial(f: QSeries, n: int, base: int) -> QSeries:
    """``f / (q^base; q^base)_n``, one binomial at a time."""
    for j in range(1, n + 1):
        f = f / _binomial(f.ring, base * j)
    return f


@dataclass(frozen=True)
class BaileyPair:
    """A Bailey pair relative to 1.

    ``alpha(R)`` and ``beta(N, order)`` return q-series; the pair is valid
    when ``beta_N = sum_{R<=N} alpha_R / ((q^b;q^b)_(N-R) (q^b;q^b)_(N+R))``.
    """

    alpha: Callable[[int], QSeries]
    beta: Callable[[int, int], QSeries]
    base: int = 1

    def beta_from_alpha(self, N: int, order: int) -> QSeries:
        total = None
        for R in range(N + 1):
            t = self.alpha(R).truncate(order)
            t = _div_qfactorial(_div_qfactorial(t, N - R, self.base), N + R, self.base)
            total = t if total is None else total + t
        return total

    def check(self, N: int, order: int) -> Comparison:
        return series_equal(self.beta(N, order), self.beta_from_alpha(N, order), order)


@dataclass(frozen=True)
class ConjugatePair:
    """A conjugate Bailey pair relative to 1.

    ``gamma_R = sum_{N>=R} delta_N / ((q^b;q^b)_(N-R) (q^b;q^b)_(N+R))``;
    ``delta_lowest(N)`` bounds the exponents of ``delta_N`` from below and
    must be nondecreasing.
    """

    delta: Callable[[int, int], QSeries]
    gamma: Callable[[int, int], QSeries]
    delta_lowest: Callable[[int], int]
    gamma_lowest: Callable[[int], int]
    base: int = 1
    ring: Ring = ZZ

    def gamma_from_delta(self, R: int, order: int) -> QSeries:
        def terms():
            for N in count(R):
                t = self.delta(N, order)
                yield _div_qfactorial(_div_qfactorial(t, N - R, self.base), N + R, self.base)

        return truncated_sum(terms(), lambda k: self.delta_lowest(R + k), order, self.ring)

    def check(self, R: int, order: int) -> Comparison:
        return series_equal(self.gamma(R, order), self.gamma_from_delta(R, order), order)


def bailey_transform(pair: BaileyPair, conj: ConjugatePair, order: int,
                     beta_lowest=lambda N: 0, alpha_lowest=lambda R: 0,
                     ring: Ring = LAURENT) -> tuple[QSeries, QSeries]:
    """Both sides ``sum_N beta_N delta_N`` and ``sum_R alpha_R gamma_R``."""

    def lift(f):
        return f.change_ring(ring) if f.ring is not ring else f

    lhs = truncated_sum(
        (lift(pair.beta(N, order)) * lift(conj.delta(N, order)) for N in count()),
        lambda N: beta_lowest(N) + conj.delta_lowest(N),
        order,
        ring,
    )
    rhs = truncated_sum(
        (lift(pair.alpha(R)) * lift(conj.gamma(R, order)) for R in count()),
        lambda R: alpha_lowest(R) + conj.gamma_lowest(R),
        order,
        ring,
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# finite Jacobi triple products


def macmahon_sides(M: int, N: int) -> tuple[QSeries, QSeries]:
    """Both sides of MacMahon's finite triple product, z carried by LAURENT.

    ``(zq;q)_M (1/z;q)_N`` against
    ``sum_{j=-N}^{M} (-1)^j q^(j(j+1)/2) z^j [M+N, N+j]``.
    """
    z = LAURENT.gen
    lhs = pochhammer(z, 1, 1, M) * pochhammer(LAURENT.inverse(z), 0, 1, N)
    rhs = QSeries.zero(LAURENT)
    for j in range(-N, M + 1):
        rhs = rhs + qbinom(M + N, N + j).shift(j * (j + 1) // 2) * LaurentA.monomial(j, sign(j))
    return lhs, rhs


def macmahon_finite_jacobi_check(M: int, N: int) -> bool:
    lhs, rhs = macmahon_sides(M, N)
    return lhs == rhs


def finite_jacobi_sides(N: int) -> tuple[QSeries, QSeries]:
    """``(a;q)_N (q/a;q)_N`` and ``sum_j (-1)^j a^j q^(j(j-1)/2) [2N, N+j]``."""
    a = LAURENT.gen
    lhs = pochhammer(a, 0, 1, N) * pochhammer(LAURENT.inverse(a), 1, 1, N)
    rhs = QSeries.zero(LAURENT)
    for j in range(-N, N + 1):
        rhs = rhs + qbinom(2 * N, N + j).shift(j * (j - 1) // 2) * LaurentA.monomial(j, sign(j))
    return lhs, rhs


def finite_jacobi_a(N: int) -> QSeries:
    """sum_{h=-N}^{N} (-1)^h a^h q^(h^2) [2N, N+h] in q^2."""
    total = QSeries.zero(LAURENT)
    for h in range(-N, N + 1):
        total = total + qbinom(2 * N, N + h, 2).shift(h * h) * LaurentA.monomial(h, sign(h))
    return total


def finite_jacobi_product(N: int) -> QSeries:
    """``(aq;q^2)_N (q/a;q^2)_N`` as an exact polynomial."""
    a = LAURENT.gen
    return pochhammer(a, 1, 2, N) * pochhammer(LAURENT.inverse(a), 1, 2, N)


# ---------------------------------------------------------------------------
# the pair (alpha, beta)


def alpha(R: int) -> QSeries:
    if R < 0:
        raise ValueError("R must be nonnegative")
    if R == 0:
        return QSeries.one(LAURENT)
    w = LaurentA.from_dict({R: sign(R), -R: sign(R)})
    return QSeries.monomial(R * R, w, LAURENT)


def beta(N: int, order: int) -> QSeries:
    num = finite_jacobi_product(N).truncate(order)
    return num / pochhammer(1, 2, 2, 2 * N, ring=LAURENT)


def bailey_relation_cleared(N: int) -> tuple[QSeries, QSeries]:
    """The pair relation at index N multiplied through by ``(q^2;q^2)_(2N)``.

    Left: ``beta_N (q^2;q^2)_(2N)``, the numerator product.  Right:
    ``sum_R alpha_R (q^2;q^2)_(2N) / ((q^2;q^2)_(N-R) (q^2;q^2)_(N+R))``,
    with each ratio obtained by exact polynomial division.
    """
    top = pochhammer(1, 2, 2, 2 * N)
    rhs = QSeries.zero(LAURENT)
    for R in range(N + 1):
        ratio = exact_quotient(top, pochhammer(1, 2, 2, N - R) * pochhammer(1, 2, 2, N + R))
        rhs = rhs + alpha(R) * ratio.change_ring(LAURENT)
    return finite_jacobi_product(N), rhs


# ---------------------------------------------------------------------------
# the conjugate pair (gamma, delta)


def delta(N: int, order: int) -> QSeries:
    num = pochhammer(1, 2, 2, 2 * N, trunc=order) * pochhammer_inf(1, 4, 4, order)
    return (num / pochhammer(-1, 2, 2, N)).shift(2 * N).truncate(order)


def gamma_tail(R: int, order: int) -> QSeries:
    """gamma_R summed from its defining series over N >= R.

    The N-th summand ``delta_N / ((q^2;q^2)_(N-R) (q^2;q^2)_(N+R))`` starts
    at ``q^(2N)`` and is advanced by the ratio
    ``q^2 (1-q^(4N+2)) (1-q^(4N+4)) / ((1+q^(2N+2)) (1-q^(2N-2R+2)) (1-q^(2N+2R+2)))``.
    """

    def terms():
        x = delta(R, order) / pochhammer(1, 2, 2, 2 * R)
        for N in count(R):
            yield x
            x = (x * _binomial(ZZ, 4 * N + 2) * _binomial(ZZ, 4 * N + 4)).shift(2).truncate(order)
            x = x / _binomial(ZZ, 2 * N + 2, -1)
            x = x / _binomial(ZZ, 2 * (N - R + 1)) / _binomial(ZZ, 2 * (N + R + 1))

    return truncated_sum(terms(), lambda k: 2 * (R + k), order)


def gamma_ksum(R: int, order: int) -> QSeries:
    """gamma_R from the rearranged k-sum
    ``q^(2R) (q^2;q^2)_inf sum_k q^(2k) (q^(4R+2k+2);q^2)_k (-q^(2R+2k+2);q^2)_inf / (q^2;q^2)_k``.
    """

    def terms():
        y = pochhammer_inf(-1, 2 * R + 2, 2, order)
        for k in count():
            yield y.shift(2 * k)
            y = (y * _binomial(ZZ, 4 * R + 4 * k + 2) * _binomial(ZZ, 4 * R + 4 * k + 4)).truncate(order)
            y = y / _binomial(ZZ, 4 * R + 2 * k + 2)
            y = y / _binomial(ZZ, 2 * R + 2 * k + 2, -1) / _binomial(ZZ, 2 * k + 2)

    inner = truncated_sum(terms(), lambda k: 2 * k, order)
    return (pochhammer_inf(1, 2, 2, order) * inner).shift(2 * R).truncate(order)


def gamma_closed(R: int, order: int) -> QSeries:
    def term(s):
        e = 2 * R + 6 * s * s + (6 * R + 4) * s
        return QSeries.from_dict({e: sign(s), e + 2 * R + 4 * s + 2: sign(s)})

    return truncated_sum((term(s) for s in count()), lambda s: 2 * R + 6 * s * s + (6 * R + 4) * s, order)


def master_sum(order: int) -> QSeries:
    """sum_R alpha_R(a) gamma_R, i.e. sum over h in Z of (-1)^h a^h q^(h^2) gamma_|h|."""
    terms = (alpha(R) * gamma_closed(R, order).change_ring(LAURENT) for R in count())
    return truncated_sum(terms, lambda R: R * R + 2 * R, order, LAURENT)


def even_first(order: int) -> QSeries:
    """sum over r in Z of a^(2r) q^(4r^2) gamma_(2|r|); the h = 2r part of the master sum."""

    def term(r):
        w = LaurentA(0, (1,)) if r == 0 else LaurentA.from_dict({2 * r: 1, -2 * r: 1})
        return gamma_closed(2 * r, order).shift(4 * r * r) * w

    return truncated_sum((term(r) for r in count()), lambda r: 4 * r * r + 4 * r, order, LAURENT)


def odd_first(order: int) -> QSeries:
    """-sum_{r>=0} (a^(2r+1) + a^(-2r-1)) q^((2r+1)^2) gamma_(2r+1)."""

    def term(r):
        h = 2 * r + 1
        w = LaurentA.from_dict({h: -1, -h: -1})
        return gamma_closed(h, order).shift(h * h) * w

    return truncated_sum((term(r) for r in count()), lambda r: 4 * r * r + 8 * r + 3, order, LAURENT)


def even_partial_tail(r: int, order: int) -> tuple[QSeries, QSeries]:
    """``q^(4r^2) gamma_(2r)`` and ``(-1)^r q^(-2r^2) sum_{n>=r} (-1)^n q^(6n^2+4n) (1+q^(4n+2))``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    lhs = gamma_closed(2 * r, order).shift(4 * r * r).truncate(order)

    def term(k):
        n = r + k
        s = sign(n + r)
        e = 6 * n * n + 4 * n - 2 * r * r
        return QSeries.from_dict({e: s, e + 4 * n + 2: s})

    rhs = truncated_sum(
        (term(k) for k in count()), lambda k: 6 * (r + k) ** 2 + 4 * (r + k) - 2 * r * r, order
    )
    return lhs, rhs


JACOBI_PAIR = BaileyPair(alpha=alpha, beta=beta, base=2)

HECKE_CONJUGATE = ConjugatePair(
    delta=delta,
    gamma=gamma_closed,
    delta_lowest=lambda N: 2 * N,
    gamma_lowest=lambda R: 2 * R,
    base=2,
    ring=ZZ,
)
