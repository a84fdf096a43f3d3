"""The two-colour series S_a(q), its product with (q^4;q^4)_inf, and the
Hecke-type double sums giving its even and odd parts.

Every infinite sum here is cut off by :func:`truncated_sum` using the lowest
q-exponent of its general term:

* S_a: the m-th term starts at ``q^(2m)``;
* even double sum: the n-th term starts at ``q^(4n^2+4n)``
  (``6n^2+4n`` less the deepest inner exponent ``2n^2``);
* odd double sum: the n-th term starts at ``q^(4n^2+8n+3)``.
"""
from __future__ import annotations

from itertools import count

from ..rings import LAURENT, ZZ, LaurentA, Ring, ring_of
from ..series import QSeries, pochhammer_inf, sign, truncated_sum

__all__ = [
    "build_S",
    "build_S_a",
    "build_P",
    "build_P_a",
    "with_q4_product",
    "build_T",
    "build_U",
    "build_V",
    "hecke_even_sum",
    "hecke_odd_sum",
    "rhs_even",
    "rhs_odd",
    "cos_weight",
    "COROLLARY_RHS",
    "rhs_corollary",
]


def _poly(ring: Ring, terms: dict) -> QSeries:
    return QSeries.from_dict(terms, ring)


def build_S(order: int, a=None) -> QSeries:
    """S_a(q) with ``a`` any unit of a coefficient ring (default: generic a).

    Consecutive terms differ by
    ``q^2 (1 - a q^(2m-1)) (1 - q^(2m-1)/a) / (1 + q^(2m))``,
    and the two a-factors multiply out to
    ``1 - (a + 1/a) q^(2m-1) + q^(4m-2)``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if a is None:
        a = LAURENT.gen
    ring = ring_of(a)
    trace = a + ring.inverse(a)

    def terms():
        t = QSeries.one(ring, order)
        yield t
        for m in count(1):
            e = 2 * m - 1
            t = (t * _poly(ring, {0: 1, e: -trace, 2 * e: 1})).shift(2).truncate(order)
            t = t / _poly(ring, {0: 1, 2 * m: 1})
            yield t

    return truncated_sum(terms(), lambda m: 2 * m, order, ring)


def build_S_a(order: int) -> QSeries:
    return build_S(order, LAURENT.gen)


def with_q4_product(f: QSeries, order: int) -> QSeries:
    """``(q^4;q^4)_inf * f`` to ``O(q^order)``."""
    return (pochhammer_inf(1, 4, 4, order, f.ring) * f).truncate(order)


def build_P(order: int, a=None) -> QSeries:
    return with_q4_product(build_S(order, a), order)


def build_P_a(order: int) -> QSeries:
    return build_P(order, LAURENT.gen)


def _direct_sum(order: int, step) -> QSeries:
    """Sum of ``t_m`` over m >= 0 where ``t_0 = 1`` and ``t_m = step(m, t_(m-1))``."""

    def terms():
        t = QSeries.one(ZZ, order)
        yield t
        for m in count(1):
            t = step(m, t)
            yield t

    return truncated_sum(terms(), lambda m: 2 * m, order, ZZ)


def build_T(order: int) -> QSeries:
    """sum_m (-q^2;q^4)_m q^(2m) / (-q^2;q^2)_m"""

    def step(m, t):
        t = (t * _poly(ZZ, {0: 1, 4 * m - 2: 1})).shift(2).truncate(order)
        return t / _poly(ZZ, {0: 1, 2 * m: 1})

    return _direct_sum(order, step)


def build_U(order: int) -> QSeries:
    """sum_m (-q^3;q^6)_m q^(2m) / ((-q;q^2)_m (-q^2;q^2)_m)"""

    def step(m, t):
        t = (t * _poly(ZZ, {0: 1, 6 * m - 3: 1})).shift(2).truncate(order)
        return t / _poly(ZZ, {0: 1, 2 * m - 1: 1}) / _poly(ZZ, {0: 1, 2 * m: 1})

    return _direct_sum(order, step)


def build_V(order: int) -> QSeries:
    """sum_m (q^3;q^6)_m q^(2m) / ((q;q^2)_m (-q^2;q^2)_m)"""

    def step(m, t):
        t = (t * _poly(ZZ, {0: 1, 6 * m - 3: -1})).shift(2).truncate(order)
        return t / _poly(ZZ, {0: 1, 2 * m - 1: -1}) / _poly(ZZ, {0: 1, 2 * m: 1})

    return _direct_sum(order, step)


# ---------------------------------------------------------------------------
# Hecke-type double sums


def hecke_even_sum(order: int, inner, ring: Ring = ZZ) -> QSeries:
    """sum_n (-1)^n q^(6n^2+4n) (1 + q^(4n+2)) * inner(n)

    ``inner(n)`` is an exact Laurent polynomial in q with exponents
    no lower than ``-2n^2``.
    """

    def term(n):
        outer = _poly(ring, {6 * n * n + 4 * n: sign(n), 6 * n * n + 8 * n + 2: sign(n)})
        return outer * inner(n)

    return truncated_sum((term(n) for n in count()), lambda n: 4 * n * n + 4 * n, order, ring)


def hecke_odd_sum(order: int, inner, ring: Ring = ZZ) -> QSeries:
    """sum_n (-1)^(n+1) q^(6n^2+10n+3) (1 + q^(4n+4)) * inner(n)

    ``inner(n)`` has exponents no lower than ``-2n(n+1)``.
    """

    def term(n):
        s = sign(n + 1)
        base = 6 * n * n + 10 * n + 3
        return _poly(ring, {base: s, base + 4 * n + 4: s}) * inner(n)

    return truncated_sum((term(n) for n in count()), lambda n: 4 * n * n + 8 * n + 3, order, ring)


def _theta(ring: Ring, pairs) -> QSeries:
    """Exact polynomial from ``(exponent, coefficient)`` pairs, summing repeats."""
    terms: dict = {}
    for e, c in pairs:
        terms[e] = terms.get(e, ring.zero()) + c
    return QSeries.from_dict(terms, ring)


def rhs_even(order: int) -> QSeries:
    """Even-part double sum with inner theta sum over |j| <= n of (-1)^j a^(2j) q^(-2j^2)."""

    def inner(n):
        return _theta(
            LAURENT, ((-2 * j * j, LaurentA.monomial(2 * j, sign(j))) for j in range(-n, n + 1))
        )

    return hecke_even_sum(order, inner, LAURENT)


def rhs_odd(order: int) -> QSeries:
    """Odd-part double sum with inner sum over 0 <= j <= n of
    (-1)^j (a^(2j+1) + a^(-2j-1)) q^(-2j(j+1))."""

    def inner(n):
        pairs = []
        for j in range(n + 1):
            s = sign(j)
            w = LaurentA.from_dict({2 * j + 1: s, -2 * j - 1: s})
            pairs.append((-2 * j * (j + 1), w))
        return _theta(LAURENT, pairs)

    return hecke_odd_sum(order, inner, LAURENT)


_COS_TABLE = (2, 1, -1, -2, -1, 1)


def cos_weight(r: int) -> int:
    """2*cos(pi*r/3), an integer with period 6."""
    return _COS_TABLE[r % 6]


def _even_inner(weight):
    return lambda n: _theta(ZZ, ((-2 * j * j, weight(j)) for j in range(-n, n + 1)))


def _odd_inner(weight):
    return lambda n: _theta(ZZ, ((-2 * j * (j + 1), weight(j)) for j in range(n + 1)))


def _cos_even_inner(n):
    # 1 + sum_{j=1}^n cos_weight(j) q^(-2j^2)
    return _theta(ZZ, [(0, 1)] + [(-2 * j * j, cos_weight(j)) for j in range(1, n + 1)])


def _even_main(order):
    return hecke_even_sum(order, _even_inner(sign))


def _odd_main(order):
    return 2 * hecke_odd_sum(order, _odd_inner(sign))


def _i_companion(order):
    return hecke_even_sum(order, _even_inner(lambda j: 1))


def _rho_even(order):
    return hecke_even_sum(order, _cos_even_inner)


def _rho_odd(order):
    return hecke_odd_sum(order, _odd_inner(lambda j: cos_weight(j - 1)))


def _omega_even(order):
    return hecke_even_sum(order, _cos_even_inner)


def _omega_odd(order):
    return hecke_odd_sum(order, _odd_inner(lambda j: cos_weight(j + 2)))


COROLLARY_RHS = {
    "even-main": _even_main,
    "odd-main": _odd_main,
    "i-companion": _i_companion,
    "rho-even": _rho_even,
    "rho-odd": _rho_odd,
    "omega-even": _omega_even,
    "omega-odd": _omega_odd,
}


def rhs_corollary(name: str, order: int) -> QSeries:
    """Integer double sum on the right of the named a = 1, i, rho, omega formula."""
    try:
        builder = COROLLARY_RHS[name]
    except KeyError:
        raise KeyError(f"unknown corollary {name!r}; known: {', '.join(COROLLARY_RHS)}") from None
    return builder(order)
