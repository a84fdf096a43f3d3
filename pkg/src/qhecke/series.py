"""Truncated Laurent series in q over an exact coefficient ring.

A :class:`QSeries` is either *exact* (a Laurent polynomial, ``trunc is None``)
or *truncated*: its coefficients are known for every exponent below
``trunc`` and nothing is claimed at or above it.  Every operation returns
the widest window on which its result is provably exact, so a coefficient
can never be silently wrong near the truncation edge.

Storage is dense between the lowest and highest nonzero exponents;
coefficients outside that span (and below ``trunc``) are known zeros.
"""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import count
from typing import Iterable, Iterator, NamedTuple

from .rings import ZZ, Ring, RingMismatchError, get_ring, ring_of

__all__ = [
    "TruncationError",
    "QSeries",
    "Comparison",
    "series_add",
    "series_mul",
    "series_invert",
    "exact_quotient",
    "pochhammer",
    "pochhammer_inf",
    "qbinom",
    "sieve",
    "coeff",
    "series_equal",
    "truncated_sum",
    "sign",
]


class TruncationError(IndexError):
    """A coefficient at or beyond the known window was requested."""


def sign(n: int) -> int:
    """(-1)^n as an int, for any integer n."""
    return -1 if n & 1 else 1


def _min_trunc(*truncs):
    known = [t for t in truncs if t is not None]
    return min(known) if known else None


def _scaled(c, v):
    if type(c) is int:
        if c == 1:
            return v
        if c == -1:
            return -v
    return c * v


class QSeries:
    __slots__ = ("ring", "min_exp", "coeffs", "trunc")

    def __init__(self, ring: Ring, coeffs: Iterable = (), min_exp: int = 0, trunc: int | None = None):
        coeffs = [ring.coerce(c) for c in coeffs]
        self._init(ring, min_exp, coeffs, trunc)

    def _init(self, ring, min_exp, coeffs, trunc):
        if trunc is not None:
            if len(coeffs) > trunc - min_exp:
                coeffs = coeffs[: max(trunc - min_exp, 0)]
        lo, hi = 0, len(coeffs)
        while lo < hi and not coeffs[lo]:
            lo += 1
        while hi > lo and not coeffs[hi - 1]:
            hi -= 1
        if lo == hi:
            min_exp = 0 if trunc is None else trunc
            coeffs = ()
        else:
            min_exp += lo
            coeffs = tuple(coeffs[lo:hi])
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "trunc", trunc)

    @classmethod
    def _make(cls, ring, min_exp, coeffs, trunc):
        obj = object.__new__(cls)
        obj._init(ring, min_exp, coeffs, trunc)
        return obj

    def __setattr__(self, key, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring = ZZ, trunc: int | None = None) -> "QSeries":
        return cls._make(ring, 0, [], trunc)

    @classmethod
    def one(cls, ring: Ring = ZZ, trunc: int | None = None) -> "QSeries":
        return cls._make(ring, 0, [ring.one()], trunc)

    @classmethod
    def monomial(cls, exp: int, c=1, ring: Ring | None = None, trunc: int | None = None) -> "QSeries":
        ring = ring or ring_of(c)
        return cls._make(ring, exp, [ring.coerce(c)], trunc)

    @classmethod
    def from_dict(cls, terms: dict, ring: Ring = ZZ, trunc: int | None = None) -> "QSeries":
        terms = {e: ring.coerce(c) for e, c in terms.items()}
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero(ring, trunc)
        lo, hi = min(terms), max(terms)
        zero = ring.zero()
        return cls._make(ring, lo, [terms.get(e, zero) for e in range(lo, hi + 1)], trunc)

    # -- inspection -------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    @property
    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient (None for zero)."""
        return self.min_exp if self.coeffs else None

    @property
    def degree(self) -> int | None:
        return self.min_exp + len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int):
        if self.trunc is not None and n >= self.trunc:
            raise TruncationError(f"q^{n} is outside the known window (trunc={self.trunc})")
        k = n - self.min_exp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero()

    def coeff(self, n: int):
        return self[n]

    def terms(self) -> Iterator[tuple[int, object]]:
        """Nonzero ``(exponent, coefficient)`` pairs in increasing order."""
        base = self.min_exp
        for k, c in enumerate(self.coeffs):
            if c:
                yield base + k, c

    def to_dict(self) -> dict:
        return dict(self.terms())

    def coefficient_list(self, lo: int, hi: int) -> list:
        """Coefficients for exponents ``lo <= n < hi``, zero padded."""
        return [self[n] for n in range(lo, hi)]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "QSeries"):
        if other.ring is not self.ring:
            raise RingMismatchError(f"series over {self.ring.name} and {other.ring.name}")

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return self + QSeries.monomial(0, self.ring.coerce(other), self.ring)
        self._check(other)
        trunc = _min_trunc(self.trunc, other.trunc)
        if not other.coeffs:
            return self.truncate(trunc) if trunc is not None else self
        if not self.coeffs:
            return other.truncate(trunc) if trunc is not None else other
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        if trunc is not None:
            hi = min(hi, trunc)
        out = [self.ring.zero()] * max(hi - lo, 0)
        for src in (self, other):
            s = src.min_exp - lo
            for k, c in enumerate(src.coeffs[: max(hi - src.min_exp, 0)]):
                out[s + k] = out[s + k] + c
        return QSeries._make(self.ring, lo, out, trunc)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._make(self.ring, self.min_exp, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return self + (-self.ring.coerce(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scalar(self, c):
        ring = self.ring
        if type(c) is not int and not ring.contains(c):
            if ring is not ZZ:
                raise RingMismatchError(f"cannot scale a {ring.name} series by {c!r}")
            ring = ring_of(c)
        return QSeries._make(ring, self.min_exp, [_scaled(c, v) for v in self.coeffs], self.trunc)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self._scalar(other)
        self._check(other)
        f, g = self, other
        if (not f.coeffs and f.trunc is None) or (not g.coeffs and g.trunc is None):
            return QSeries.zero(self.ring)
        cands = []
        if f.trunc is not None:
            cands.append(f.trunc + g.min_exp)
        if g.trunc is not None:
            cands.append(g.trunc + f.min_exp)
        trunc = min(cands) if cands else None
        lo = f.min_exp + g.min_exp
        hi = f.min_exp + g.min_exp + len(f.coeffs) + len(g.coeffs) - 1
        if trunc is not None:
            hi = min(hi, trunc)
        if hi <= lo:
            return QSeries.zero(self.ring, trunc)
        # loop over the operand with fewer nonzero terms
        sf = sum(1 for c in f.coeffs if c)
        sg = sum(1 for c in g.coeffs if c)
        sparse, dense = (f, g) if sf <= sg else (g, f)
        out = [self.ring.zero()] * (hi - lo)
        dcoeffs = dense.coeffs
        for e, c in sparse.terms():
            start = e + dense.min_exp - lo
            stop = min(len(dcoeffs), hi - lo - start)
            if stop <= 0:
                continue
            if type(c) is int and c == 1:
                for k in range(stop):
                    out[start + k] = out[start + k] + dcoeffs[k]
            elif type(c) is int and c == -1:
                for k in range(stop):
                    out[start + k] = out[start + k] - dcoeffs[k]
            else:
                for k in range(stop):
                    v = dcoeffs[k]
                    if v:
                        out[start + k] = out[start + k] + c * v
        return QSeries._make(self.ring, lo, out, trunc)

    def __rmul__(self, other):
        return self._scalar(other)

    def __truediv__(self, other):
        if not isinstance(other, QSeries):
            inv = self.ring.inverse(self.ring.coerce(other))
            return self._scalar(inv)
        self._check(other)
        if self.trunc is None and other.trunc is None:
            return exact_quotient(self, other)
        return _series_divide(self, other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use inverse() for negative powers")
        result = QSeries.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self, trunc: int | None = None) -> "QSeries":
        """Multiplicative inverse up to the widest provable window.

        Exact (polynomial) input needs an explicit ``trunc``.
        """
        f = self
        if trunc is not None:
            f = f.truncate(trunc + 2 * (f.valuation or 0))
        if f.trunc is None:
            raise ValueError("inverting an exact series requires trunc")
        return _series_divide(QSeries.one(self.ring), f)

    # -- window and exponent maps -----------------------------------------

    def truncate(self, n: int) -> "QSeries":
        trunc = n if self.trunc is None else min(self.trunc, n)
        if trunc == self.trunc:
            return self
        return QSeries._make(self.ring, self.min_exp, list(self.coeffs), trunc)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q^k``."""
        trunc = None if self.trunc is None else self.trunc + k
        if not self.coeffs:
            return QSeries.zero(self.ring, trunc)
        return QSeries._make(self.ring, self.min_exp + k, list(self.coeffs), trunc)

    def sieve(self, modulus: int, residue: int) -> "QSeries":
        """Keep only the terms whose exponent is ``residue`` mod ``modulus``."""
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        if not 0 <= residue < modulus:
            raise ValueError(f"residue must lie in [0, {modulus})")
        zero = self.ring.zero()
        base = self.min_exp
        out = [c if (base + k - residue) % modulus == 0 else zero for k, c in enumerate(self.coeffs)]
        return QSeries._make(self.ring, base, out, self.trunc)

    def subs(self, base: int) -> "QSeries":
        """Substitute ``q -> q^base`` (base >= 1)."""
        if base < 1:
            raise ValueError("base must be positive")
        trunc = None if self.trunc is None else self.trunc * base
        return QSeries.from_dict({e * base: c for e, c in self.terms()}, self.ring, trunc)

    def subs_neg_q(self) -> "QSeries":
        """Substitute ``q -> -q``."""
        base = self.min_exp
        out = [-c if (base + k) & 1 else c for k, c in enumerate(self.coeffs)]
        return QSeries._make(self.ring, base, out, self.trunc)

    def map_coeffs(self, fn, ring: Ring | None = None) -> "QSeries":
        """Apply ``fn`` to every coefficient, landing in ``ring``.

        ``fn`` must be additive and send zero to zero (a ring homomorphism
        in practice), otherwise the stored span would be wrong.
        """
        ring = ring or self.ring
        return QSeries._make(ring, self.min_exp, [ring.coerce(fn(c)) for c in self.coeffs], self.trunc)

    def change_ring(self, ring: Ring) -> "QSeries":
        if ring is self.ring:
            return self
        if self.ring is not ZZ:
            raise RingMismatchError(f"no canonical map {self.ring.name} -> {ring.name}")
        return self.map_coeffs(ring.from_int, ring)

    # -- comparison and display -------------------------------------------

    def _constant(self):
        """The constant value of an exact polynomial of degree <= 0 in q, else None."""
        if self.trunc is not None:
            return None
        if not self.coeffs:
            return self.ring.zero()
        if self.min_exp == 0 and len(self.coeffs) == 1:
            return self.coeffs[0]
        return None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            if type(other) is int or self.ring.contains(other):
                c = self._constant()
                return c is not None and c == other
            return NotImplemented
        return (
            self.ring is other.ring
            and self.trunc == other.trunc
            and self.min_exp == other.min_exp
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        c = self._constant()
        if c is not None:
            return hash(c)  # consistent with equality against plain scalars
        return hash((self.ring.name, self.min_exp, self.coeffs, self.trunc))

    def __repr__(self):
        parts = []
        for e, c in self.terms():
            text = self.ring.render(c)
            if e == 0:
                parts.append(text)
                continue
            mono = "q" if e == 1 else f"q^{e}"
            if text == "1":
                parts.append(mono)
            elif text == "-1":
                parts.append("-" + mono)
            elif " " in text:
                parts.append(f"({text})*{mono}")
            else:
                parts.append(f"{text}*{mono}")
        body = parts[0] if parts else "0"
        for p in parts[1:]:
            body += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        if self.trunc is not None:
            body += f" + O(q^{self.trunc})"
        return body

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "ring": self.ring.name,
            "min_exp": self.min_exp,
            "trunc": self.trunc,
            "coeffs": [self.ring.render(c) for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QSeries":
        ring = get_ring(obj["ring"])
        coeffs = [ring.parse(c) for c in obj["coeffs"]]
        return cls._make(ring, int(obj["min_exp"]), coeffs, obj["trunc"])

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_json_obj(json.loads(text))


def _long_divide(f: QSeries, g: QSeries, hmin: int, length: int) -> list:
    """First ``length`` coefficients of f/g starting at ``q^hmin``."""
    ring = f.ring
    v = g.valuation
    inv = ring.inverse(g.coeffs[0])
    tail = [(e - v, c) for e, c in g.terms() if e > v]
    h = []
    for n in range(length):
        fe = hmin + n + v
        k = fe - f.min_exp
        acc = f.coeffs[k] if 0 <= k < len(f.coeffs) else ring.zero()
        for d, c in tail:
            if d > n:
                break
            x = h[n - d]
            if x:
                acc = acc - _scaled(c, x)
        h.append(_scaled(inv, acc))
    return h


def _series_divide(f: QSeries, g: QSeries) -> QSeries:
    v = g.valuation
    if v is None:
        raise ZeroDivisionError("division by a series that is zero in its known window")
    if not f.ring.is_unit(g.coeffs[0]):
        raise ValueError(f"leading coefficient {f.ring.render(g.coeffs[0])} is not a unit")
    hmin = f.min_exp - v
    cands = []
    if f.trunc is not None:
        cands.append(f.trunc - v)
    if g.trunc is not None:
        cands.append(g.trunc - 2 * v + f.min_exp)
    trunc = min(cands)
    if not f.coeffs:
        return QSeries.zero(f.ring, trunc)
    return QSeries._make(f.ring, hmin, _long_divide(f, g, hmin, max(trunc - hmin, 0)), trunc)


def exact_quotient(f: QSeries, g: QSeries) -> QSeries:
    """Polynomial quotient ``f / g``; raises ValueError unless g divides f."""
    if f.trunc is not None or g.trunc is not None:
        raise ValueError("exact_quotient needs exact (polynomial) operands")
    f._check(g)
    if not g.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f.coeffs:
        return QSeries.zero(f.ring)
    if not f.ring.is_unit(g.coeffs[0]):
        raise ValueError(f"leading coefficient {f.ring.render(g.coeffs[0])} is not a unit")
    hmin = f.min_exp - g.min_exp
    length = f.degree - g.degree - hmin + 1
    if length <= 0:
        raise ValueError("polynomial is not divisible")
    h = QSeries._make(f.ring, hmin, _long_divide(f, g, hmin, length), None)
    if h * g != f:
        raise ValueError("polynomial is not divisible")
    return h


# ---------------------------------------------------------------------------
# functional aliases


def series_add(f: QSeries, g: QSeries) -> QSeries:
    return f + g


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    return f * g


def series_invert(f: QSeries, trunc: int | None = None) -> QSeries:
    return f.inverse(trunc)


def sieve(f: QSeries, modulus: int, residue: int) -> QSeries:
    return f.sieve(modulus, residue)


def coeff(f: QSeries, n: int):
    return f[n]


class Comparison(NamedTuple):
    equal: bool
    first_mismatch: int | None = None

    def __bool__(self):
        return self.equal


def series_equal(f: QSeries, g: QSeries, up_to: int | None = None) -> Comparison:
    """Compare coefficients below ``up_to``.

    ``up_to=None`` compares on the common window (everything, for two exact
    series).  Asking for more than either series knows is an error.
    """
    f._check(g)
    common = _min_trunc(f.trunc, g.trunc)
    if up_to is None:
        up_to = common
    elif common is not None and up_to > common:
        raise TruncationError(f"cannot compare below q^{up_to}: known only below q^{common}")
    exps = sorted(set(f.to_dict()) | set(g.to_dict()))
    for e in exps:
        if up_to is not None and e >= up_to:
            break
        if f[e] != g[e]:
            return Comparison(False, e)
    return Comparison(True, None)


# ---------------------------------------------------------------------------
# q-analog primitives


def _binomial_factor(c, exp: int, ring: Ring) -> QSeries:
    """The polynomial ``1 - c*q^exp``."""
    if exp == 0:
        return QSeries._make(ring, 0, [ring.one() - c], None)
    return QSeries.from_dict({0: 1, exp: -c}, ring)


def pochhammer(c, e: int, base: int, n: int, trunc: int | None = None, ring: Ring | None = None) -> QSeries:
    """``(c q^e; q^base)_n``, the product of ``1 - c q^(e + base*j)`` for j < n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ring = ring or ring_of(c)
    c = ring.coerce(c)
    result = QSeries.one(ring, trunc)
    for j in range(n):
        result = result * _binomial_factor(c, e + base * j, ring)
    return result


def pochhammer_inf(c, e: int, base: int, trunc: int, ring: Ring | None = None) -> QSeries:
    """``(c q^e; q^base)_inf`` to ``O(q^trunc)``; needs ``e >= 1``."""
    if e <= 0:
        raise ValueError("infinite product needs a positive starting exponent")
    if base <= 0:
        raise ValueError("base must be positive")
    ring = ring or ring_of(c)
    c = ring.coerce(c)
    result = QSeries.one(ring, trunc)
    j = e
    while j < trunc:
        result = result * _binomial_factor(c, j, ring)
        j += base
    return result


@lru_cache(maxsize=4096)
def qbinom(M: int, K: int, base: int = 1) -> QSeries:
    """Gaussian binomial ``[M, K]`` in ``q^base`` as an exact integer polynomial."""
    if K < 0 or K > M:
        return QSeries.zero(ZZ)
    K = min(K, M - K)
    result = QSeries.one(ZZ)
    for i in range(1, K + 1):
        result = result * _binomial_factor(1, base * (M - K + i), ZZ)
        result = exact_quotient(result, _binomial_factor(1, base * i, ZZ))
    return result


def truncated_sum(terms: Iterable[QSeries], lowest, order: int, ring: Ring = ZZ) -> QSeries:
    """Sum an infinite series of terms to ``O(q^order)``.

    ``lowest(k)`` is a nondecreasing lower bound for the exponents of term
    ``k``; summation stops at the first ``k`` with ``lowest(k) >= order``
    and each term is checked against its bound.  ``terms`` is consumed
    lazily, so it may be an unbounded generator.
    """
    total = QSeries.zero(ring, order)
    it = iter(terms)
    prev = None
    for k in count():
        lo = lowest(k)
        if prev is not None and lo < prev:
            raise ValueError(f"exponent bound decreased at k={k}: {prev} -> {lo}")
        prev = lo
        if lo >= order:
            break
        t = next(it)
        v = t.valuation
        if v is not None and v < lo:
            raise ValueError(f"term k={k} starts at q^{v}, below its bound q^{lo}")
        total = total + t.truncate(order)
    return total
