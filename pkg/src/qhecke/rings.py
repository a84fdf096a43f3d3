"""Exact coefficient rings for q-series.

Four kinds of ring are provided:

* ``ZZ`` -- the integers, whose elements are plain Python ``int``.
* ``LAURENT`` -- Laurent polynomials in one auxiliary variable ``a``.
* ``GAUSS``, ``PRIM6``, ``PRIM3`` -- the quadratic rings Z[x]/(x^2+1),
  Z[x]/(x^2-x+1) and Z[x]/(x^2+x+1), i.e. Z[i], Z[e^{pi i/3}], Z[e^{2 pi i/3}].

Elements support ``+ - *`` and ``==`` with each other and with ``int``
(the integers embed canonically in every ring). Mixing elements of two
different non-integer rings raises :class:`RingMismatchError`.
"""
from __future__ import annotations

import re
from typing import Iterable

__all__ = [
    "RingMismatchError",
    "Ring",
    "IntegerRing",
    "LaurentRing",
    "CyclotomicRing",
    "LaurentA",
    "CyclotomicElem",
    "ZZ",
    "LAURENT",
    "GAUSS",
    "PRIM6",
    "PRIM3",
    "RINGS",
    "ring_of",
    "get_ring",
    "invert_a",
    "negate_a",
    "specialize_a",
]


class RingMismatchError(TypeError):
    """Raised when elements (or series) over different rings are combined."""


class Ring:
    """Common interface shared by all coefficient rings."""

    name: str

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def coerce(self, x):
        if type(x) is int:
            return self.from_int(x)
        if not self.contains(x):
            raise RingMismatchError(f"{x!r} is not an element of {self.name}")
        return x

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def render(self, x) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class IntegerRing(Ring):
    name = "ZZ"

    def from_int(self, n):
        return int(n)

    def contains(self, x):
        return type(x) is int

    def is_unit(self, x):
        return x in (1, -1)

    def inverse(self, x):
        if x not in (1, -1):
            raise ZeroDivisionError(f"{x} is not a unit in ZZ")
        return x

    def render(self, x):
        return str(x)

    def parse(self, text):
        return int(text.strip())


# ---------------------------------------------------------------------------
# Laurent polynomials in a


def _trim(offset: int, coeffs: list) -> tuple[int, tuple]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return offset + lo, tuple(coeffs[lo:hi])


class LaurentA:
    """A Laurent polynomial ``sum_k coeffs[k] * a^(offset + k)``.

    Stored dense and trimmed, so zero is ``LaurentA(0, ())`` and equal
    polynomials have identical fields.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int = 0, coeffs: Iterable[int] = ()):
        offset, coeffs = _trim(offset, [int(c) for c in coeffs])
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, key, value):
        raise AttributeError("LaurentA is immutable")

    @classmethod
    def _raw(cls, offset: int, coeffs: tuple) -> "LaurentA":
        # caller guarantees coeffs is already trimmed
        obj = object.__new__(cls)
        object.__setattr__(obj, "offset", offset)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "LaurentA":
        return cls(exp, (c,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentA":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    def to_dict(self) -> dict[int, int]:
        return {self.offset + k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def min_degree(self):
        return self.offset if self.coeffs else None

    @property
    def max_degree(self):
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, exp: int) -> int:
        k = exp - self.offset
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        if len(self.coeffs) == 1 and self.offset == 0:
            return hash(self.coeffs[0])
        if not self.coeffs:
            return hash(0)
        return hash((self.offset, self.coeffs))

    def _other(self, other):
        if type(other) is LaurentA:
            return other
        if type(other) is int:
            return LaurentA(0, (other,))
        if isinstance(other, CyclotomicElem):
            raise RingMismatchError("cannot combine LAURENT and " + other.ring.name)
        return None

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.offset == o.offset and self.coeffs == o.coeffs

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        lo = min(self.offset, o.offset)
        hi = max(self.offset + len(self.coeffs), o.offset + len(o.coeffs))
        out = [0] * (hi - lo)
        s = self.offset - lo
        for k, c in enumerate(self.coeffs):
            out[s + k] = c
        s = o.offset - lo
        for k, c in enumerate(o.coeffs):
            out[s + k] += c
        return LaurentA(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentA._raw(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if type(other) is int:
            if other == 0:
                return LaurentA._raw(0, ())
            return LaurentA._raw(self.offset, tuple(other * c for c in self.coeffs))
        o = self._other(other)
        if o is None:
            return NotImplemented
        x, y = self.coeffs, o.coeffs
        if not x or not y:
            return LaurentA._raw(0, ())
        if len(x) < len(y):
            x, y = y, x
        if len(y) == 1:
            c = y[0]
            return LaurentA._raw(self.offset + o.offset, tuple(c * v for v in x))
        out = [0] * (len(x) + len(y) - 1)
        for j, c in enumerate(y):
            if c:
                for k, v in enumerate(x, j):
                    out[k] += c * v
        return LaurentA(self.offset + o.offset, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return LAURENT.inverse(self) ** (-n)
        result = LaurentA._raw(0, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"LaurentA({LAURENT.render(self)!r})"

    def __str__(self):
        return LAURENT.render(self)


_TERM_RE = re.compile(
    r"""\s*([+-])?\s*          # sign
        (?:(\d+)\s*\*?\s*)?    # coefficient
        (?:([A-Za-z]+)(?:\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?  # variable and exponent
        \s*""",
    re.VERBOSE,
)


def parse_sparse(text: str, var: str) -> dict[int, int]:
    """Parse ``"c*var^e + ..."`` style text into ``{e: c}``.

    Accepts bare constants, ``var``, ``var^e``, ``c*var^e`` and ``-`` signs.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        sign, coef, name, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        if coef is None and name is None:
            raise ValueError(f"dangling sign in {text!r}")
        if name is not None and name != var:
            raise ValueError(f"unknown variable {name!r}, expected {var!r}")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        e = 0 if name is None else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return {e: c for e, c in terms.items() if c}


def render_sparse(terms: dict[int, int], var: str) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms):
        c = terms[e]
        body = f"{abs(c)}*{var}^{e}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class LaurentRing(Ring):
    name = "LAURENT"

    @property
    def gen(self) -> LaurentA:
        return LaurentA(1, (1,))

    def from_int(self, n):
        return LaurentA(0, (n,))

    def contains(self, x):
        return type(x) is LaurentA

    def is_unit(self, x):
        x = self.coerce(x)
        return len(x.coeffs) == 1 and x.coeffs[0] in (1, -1)

    def inverse(self, x):
        x = self.coerce(x)
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit in LAURENT")
        return LaurentA._raw(-x.offset, x.coeffs)

    def render(self, x):
        return render_sparse(self.coerce(x).to_dict(), "a")

    def parse(self, text):
        return LaurentA.from_dict(parse_sparse(text, "a"))


def invert_a(x) -> LaurentA:
    """The automorphism ``a -> 1/a``."""
    x = LAURENT.coerce(x)
    if not x.coeffs:
        return x
    return LaurentA._raw(-x.max_degree, x.coeffs[::-1])


def negate_a(x) -> LaurentA:
    """The automorphism ``a -> -a``."""
    x = LAURENT.coerce(x)
    lo = x.offset
    return LaurentA._raw(lo, tuple(-c if (lo + k) & 1 else c for k, c in enumerate(x.coeffs)))


def specialize_a(x, target: Ring, image):
    """Evaluate a Laurent polynomial at ``a = image`` in ``target``.

    ``image`` must be a unit so that negative powers make sense.
    """
    x = LAURENT.coerce(x)
    image = target.coerce(image)
    if not target.is_unit(image):
        raise ValueError(f"{target.render(image)} is not a unit in {target.name}")
    if not x.coeffs:
        return target.zero()
    lo = x.offset
    step = image if lo >= 0 else target.inverse(image)
    power = target.one()
    for _ in range(abs(lo)):
        power = power * step
    total = target.zero()
    for c in x.coeffs:
        if c:
            total = total + c * power
        power = power * image
    return total


# ---------------------------------------------------------------------------
# Quadratic cyclotomic rings


class CyclotomicElem:
    """``c0 + c1*x`` in Z[x]/(x^2 - s*x - t), always kept reduced."""

    __slots__ = ("ring", "c0", "c1")

    def __init__(self, ring: "CyclotomicRing", c0: int = 0, c1: int = 0):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "c0", int(c0))
        object.__setattr__(self, "c1", int(c1))

    def __setattr__(self, key, value):
        raise AttributeError("CyclotomicElem is immutable")

    def _other(self, other):
        if type(other) is int:
            return CyclotomicElem(self.ring, other, 0)
        if type(other) is CyclotomicElem:
            if other.ring is not self.ring:
                raise RingMismatchError(f"cannot combine {self.ring.name} and {other.ring.name}")
            return other
        if type(other) is LaurentA:
            raise RingMismatchError(f"cannot combine {self.ring.name} and LAURENT")
        return None

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        if self.c1 == 0:
            return hash(self.c0)
        return hash((self.ring.name, self.c0, self.c1))

    def __bool__(self):
        return bool(self.c0 or self.c1)

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicElem(self.ring, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElem(self.ring, -self.c0, -self.c1)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicElem(self.ring, self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if type(other) is int:
            return CyclotomicElem(self.ring, other * self.c0, other * self.c1)
        o = self._other(other)
        if o is None:
            return NotImplemented
        s, t = self.ring.s, self.ring.t
        hi = self.c1 * o.c1
        return CyclotomicElem(
            self.ring,
            self.c0 * o.c0 + t * hi,
            self.c0 * o.c1 + self.c1 * o.c0 + s * hi,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.ring.inverse(self) ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"{self.ring.name}({self.ring.render(self)!r})"

    def __str__(self):
        return self.ring.render(self)


class CyclotomicRing(Ring):
    """Z[x] modulo the monic quadratic ``x^2 - s*x - t``."""

    def __init__(self, name: str, s: int, t: int, symbol: str, order: int):
        self.name = name
        self.s = s
        self.t = t
        self.symbol = symbol
        self.order = order  # multiplicative order of the generator

    @property
    def gen(self) -> CyclotomicElem:
        return CyclotomicElem(self, 0, 1)

    def from_int(self, n):
        return CyclotomicElem(self, n, 0)

    def contains(self, x):
        return type(x) is CyclotomicElem and x.ring is self

    def conjugate(self, x) -> CyclotomicElem:
        x = self.coerce(x)
        return CyclotomicElem(self, x.c0 + self.s * x.c1, -x.c1)

    def norm(self, x) -> int:
        x = self.coerce(x)
        return x.c0 * x.c0 + self.s * x.c0 * x.c1 - self.t * x.c1 * x.c1

    def is_unit(self, x):
        return self.norm(x) in (1, -1)

    def inverse(self, x):
        n = self.norm(x)
        if n not in (1, -1):
            raise ZeroDivisionError(f"{self.render(x)} is not a unit in {self.name}")
        return self.conjugate(x) * n

    def render(self, x):
        x = self.coerce(x)
        sign = "+" if x.c1 >= 0 else "-"
        return f"{x.c0} {sign} {abs(x.c1)}*{self.symbol}"

    def parse(self, text):
        terms = parse_sparse(text, self.symbol)
        if any(e not in (0, 1) for e in terms):
            raise ValueError(f"{self.name} elements have degree < 2: {text!r}")
        return CyclotomicElem(self, terms.get(0, 0), terms.get(1, 0))


ZZ = IntegerRing()
LAURENT = LaurentRing()
GAUSS = CyclotomicRing("GAUSS", s=0, t=-1, symbol="i", order=4)
PRIM6 = CyclotomicRing("PRIM6", s=1, t=-1, symbol="rho", order=6)
PRIM3 = CyclotomicRing("PRIM3", s=-1, t=-1, symbol="omega", order=3)

RINGS = {r.name: r for r in (ZZ, LAURENT, GAUSS, PRIM6, PRIM3)}


def get_ring(name: str) -> Ring:
    try:
        return RINGS[name]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}") from None


def ring_of(x) -> Ring:
    if type(x) is int:
        return ZZ
    if type(x) is LaurentA:
        return LAURENT
    if type(x) is CyclotomicElem:
        return x.ring
    raise TypeError(f"{x!r} is not a ring element")
