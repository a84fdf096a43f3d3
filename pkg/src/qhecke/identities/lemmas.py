"""Finite pentagonal polynomials D_N(q) and the two-variable tail series L(z)."""
from __future__ import annotations

from itertools import count
from typing import Iterator

from ..rings import LAURENT, ZZ, LaurentA
from ..series import QSeries, pochhammer_inf, qbinom, sign, truncated_sum

__all__ = [
    "pentagonal_exponent",
    "pentagonal_poly_def",
    "pentagonal_poly_closed",
    "pentagonal_family",
    "build_L",
    "build_L_definition",
    "z_coefficient",
    "tail_rhs",
    "tail_coeff_rhs",
]


def pentagonal_exponent(N: int, j: int) -> int:
    """Exponent ``j(3j+1-2N)/2`` of the j-th summand of D_N."""
    return j * (3 * j + 1 - 2 * N) // 2


def pentagonal_poly_def(N: int) -> QSeries:
    """D_N(q) summed straight from its q-binomial definition."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    total = QSeries.zero(ZZ)
    for j in range(N // 2 + 1):
        total = total + qbinom(N - j, j).shift(pentagonal_exponent(N, j)) * sign(j)
    return total


def pentagonal_poly_closed(N: int) -> QSeries:
    if N < 0:
        raise ValueError("N must be nonnegative")
    s, r = divmod(N, 3)
    if r == 0:
        return QSeries.monomial(-s * (3 * s - 1) // 2, sign(s))
    if r == 1:
        return QSeries.monomial(-s * (3 * s + 1) // 2, sign(s))
    return QSeries.zero(ZZ)


def _add_shifted(dst: list, src: list, shift: int) -> None:
    for k, c in enumerate(src, shift):
        dst[k] += c


def pentagonal_family(n_max: int) -> Iterator[tuple[int, QSeries]]:
    """Yield ``(N, D_N)`` for ``0 <= N <= n_max`` from the definition.

    The Gaussian binomials ``[N-j, j]`` along each antidiagonal are carried
    forward with ``[N-j, j] = [N-1-j, j] + q^(N-2j) [N-1-j, j-1]``, so the
    whole sweep costs one addition per coefficient instead of a fresh
    product for every binomial.  Rows are plain integer lists from q^0.
    """
    prev2: list[list[int]] = []
    prev1: list[list[int]] = []
    for N in range(n_max + 1):
        row = []
        for j in range(N // 2 + 1):
            deg = j * (N - 2 * j)
            poly = [0] * (deg + 1)
            if N == 0:
                poly[0] = 1
            else:
                if j < len(prev1):
                    _add_shifted(poly, prev1[j], 0)
                if j >= 1:
                    _add_shifted(poly, prev2[j - 1], N - 2 * j)
            row.append(poly)
        lo = min(pentagonal_exponent(N, j) for j in range(len(row)))
        hi = max(pentagonal_exponent(N, j) + len(p) for j, p in enumerate(row))
        acc = [0] * (hi - lo)
        for j, poly in enumerate(row):
            base = pentagonal_exponent(N, j) - lo
            if j & 1:
                for k, c in enumerate(poly, base):
                    acc[k] -= c
            else:
                _add_shifted(acc, poly, base)
        yield N, QSeries(ZZ, acc, lo)
        prev2, prev1 = prev1, row


# ---------------------------------------------------------------------------
# L(z): z is carried either as an explicit index or by the LAURENT variable.


def build_L(z_degree: int, q_order: int) -> list[QSeries]:
    """``[z^N] L`` for ``N <= z_degree`` from the (j, v) double sum.

    With ``N = 2j + v`` the summand is
    ``(-1)^j q^((3j^2+3j+v^2+2jv+v)/2) [j+v, j]``.
    """
    out = []
    for N in range(z_degree + 1):
        total = QSeries.zero(ZZ, q_order)
        for j in range(N // 2 + 1):
            v = N - 2 * j
            e = (3 * j * j + 3 * j + v * v + 2 * j * v + v) // 2
            if e >= q_order:
                continue
            total = total + qbinom(j + v, j).shift(e).truncate(q_order) * sign(j)
        out.append(total)
    return out


def _L_series(q_order: int) -> QSeries:
    """The left side of the tail identity as a q-series over Z[z, 1/z].

    The k-th summand ``X_k = (z^2 q^(k+1);q)_k (-z q^(k+1);q)_inf / (q;q)_k``
    is advanced by
    ``X_(k+1) = X_k (1 - z^2 q^(2k+1)) (1 - z^2 q^(2k+2))
    / ((1 - z^2 q^(k+1)) (1 + z q^(k+1)) (1 - q^(k+1)))``.
    """
    z = LAURENT.gen
    z2 = z * z

    def poly(terms):
        return QSeries.from_dict(terms, LAURENT)

    def terms():
        x = pochhammer_inf(-z, 1, 1, q_order, LAURENT)
        k = 0
        while True:
            yield x.shift(k)
            x = x * poly({0: 1, 2 * k + 1: -z2}) * poly({0: 1, 2 * k + 2: -z2})
            x = x.truncate(q_order)
            x = x / poly({0: 1, k + 1: -z2}) / poly({0: 1, k + 1: z}) / poly({0: 1, k + 1: -1})
            k += 1

    total = truncated_sum(terms(), lambda k: k, q_order, LAURENT)
    return (pochhammer_inf(1, 1, 1, q_order, LAURENT) * total).truncate(q_order)


def z_coefficient(f: QSeries, N: int) -> QSeries:
    """Coefficient of ``a^N`` (read as z^N) of a LAURENT series, over ZZ."""
    return QSeries.from_dict({e: c[N] for e, c in f.terms()}, ZZ, f.trunc)


def build_L_definition(z_degree: int, q_order: int) -> list[QSeries]:
    """``[z^N] L`` for ``N <= z_degree``, expanded from the original product form."""
    L = _L_series(q_order)
    return [z_coefficient(L, N) for N in range(z_degree + 1)]


def tail_rhs(q_order: int) -> QSeries:
    """sum_s (-1)^s z^(3s) q^(3s^2+2s) (1 + z q^(2s+1)), z as the LAURENT variable."""

    def term(s):
        sg = sign(s)
        return QSeries.from_dict(
            {
                3 * s * s + 2 * s: LaurentA.monomial(3 * s, sg),
                3 * s * s + 4 * s + 1: LaurentA.monomial(3 * s + 1, sg),
            },
            LAURENT,
        )

    return truncated_sum((term(s) for s in count()), lambda s: 3 * s * s + 2 * s, q_order, LAURENT)


def tail_coeff_rhs(N: int, q_order: int, D_N: QSeries | None = None) -> QSeries:
    """``q^(N(N+1)/2) D_N(q)`` truncated to ``q_order``."""
    if D_N is None:
        D_N = pentagonal_poly_def(N)
    return D_N.shift(N * (N + 1) // 2).truncate(q_order)
