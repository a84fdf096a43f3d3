"""Named identities and the driver that checks them coefficient by coefficient."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Sequence, Union

from ..rings import ZZ
from ..series import QSeries, series_equal
from . import bailey, hecke, lemmas

__all__ = ["IdentitySpec", "VerifyReport", "REGISTRY", "get_identity", "verify", "verify_named"]

Sides = Union[QSeries, Sequence[QSeries]]

STATUSES = ("match", "mismatch", "error")


@dataclass(frozen=True)
class IdentitySpec:
    name: str
    ring: str
    description: str
    lhs: Callable[[int], Sides]
    rhs: Callable[[int], Sides]
    default_order: int = 200
    order_meaning: str = "q-truncation"


@dataclass
class VerifyReport:
    identity: str
    ring: str
    order: int
    status: str
    first_mismatch: dict | None = None
    elapsed_ms: int = 0
    message: str | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "match" and self.first_mismatch is not None:
            raise ValueError("a matching report cannot carry a mismatch")
        if self.status == "mismatch" and self.first_mismatch is None:
            raise ValueError("a mismatch report needs first_mismatch")

    @property
    def ok(self) -> bool:
        return self.status == "match"

    def to_json(self) -> str:
        obj = {k: v for k, v in asdict(self).items() if v is not None or k == "first_mismatch"}
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text: str) -> "VerifyReport":
        return cls(**json.loads(text))

    def __str__(self):
        head = f"{self.status.upper():8} {self.identity} ring={self.ring} order={self.order} ({self.elapsed_ms} ms)"
        if self.first_mismatch:
            fm = self.first_mismatch
            where = f"index {fm['index']}, " if "index" in fm else ""
            head += f"\n         first mismatch at {where}q^{fm['exponent']}: lhs={fm['lhs']} rhs={fm['rhs']}"
        if self.message:
            head += f"\n         {self.message}"
        return head


# ---------------------------------------------------------------------------
# shared builders, cached because several identities reuse them


@lru_cache(maxsize=4)
def _P_a(order):
    return hecke.build_P_a(order)


@lru_cache(maxsize=4)
def _P1(order):
    return hecke.build_P(order, 1)


@lru_cache(maxsize=4)
def _q4(name, order):
    build = {"T": hecke.build_T, "U": hecke.build_U, "V": hecke.build_V}[name]
    return hecke.with_q4_product(build(order), order)


@lru_cache(maxsize=2)
def _pentagonal_table(n_max):
    return tuple(D for _, D in lemmas.pentagonal_family(n_max))


def _zero(order):
    return QSeries.zero(ZZ, order)


def _recurrence_rhs(order):
    table = _pentagonal_table(order)
    return [(table[N - 3] * -1).shift(2 - N) for N in range(3, order + 1)]


TAIL_Z_DEGREE = 40
MACMAHON_SIZE = 8
JACOBI_SIZE = 12
GAMMA_SIZE = 15
ER_TAIL_SIZE = 6


@lru_cache(maxsize=8)
def _paired(kind, n):
    """Both sides of an identity family whose builder returns (lhs, rhs) per index."""
    if kind == "macmahon":
        grid = [(M, N) for M in range(MACMAHON_SIZE + 1) for N in range(MACMAHON_SIZE + 1)]
        sides = [bailey.macmahon_sides(M, N) for M, N in grid]
    elif kind == "bailey":
        sides = [bailey.bailey_relation_cleared(N) for N in range(JACOBI_SIZE + 1)]
    elif kind == "er-tail":
        sides = [bailey.even_partial_tail(r, n) for r in range(ER_TAIL_SIZE + 1)]
    else:
        raise KeyError(kind)
    return [s[0] for s in sides], [s[1] for s in sides]


def _left(kind):
    return lambda n: _paired(kind, n)[0]


def _right(kind):
    return lambda n: _paired(kind, n)[1]


_SPECS = [
    IdentitySpec(
        "thm1.1-even", "LAURENT",
        "even part of (q^4;q^4)_inf S_a(q) = sum_n (-1)^n q^(6n^2+4n)(1+q^(4n+2)) sum_|j|<=n (-1)^j a^(2j) q^(-2j^2)",
        lambda n: _P_a(n).sieve(2, 0), hecke.rhs_even,
    ),
    IdentitySpec(
        "thm1.1-odd", "LAURENT",
        "odd part of (q^4;q^4)_inf S_a(q) = sum_n (-1)^(n+1) q^(6n^2+10n+3)(1+q^(4n+4)) "
        "sum_{j<=n} (-1)^j (a^(2j+1)+a^(-2j-1)) q^(-2j(j+1))",
        lambda n: _P_a(n).sieve(2, 1), hecke.rhs_odd,
    ),
    IdentitySpec(
        "cor-even", "ZZ", "a = 1: even part of (q^4;q^4)_inf S(q) as a Hecke-type double sum",
        lambda n: _P1(n).sieve(2, 0), lambda n: hecke.rhs_corollary("even-main", n),
    ),
    IdentitySpec(
        "cor-odd", "ZZ", "a = 1: odd part of (q^4;q^4)_inf S(q), twice the odd double sum",
        lambda n: _P1(n).sieve(2, 1), lambda n: hecke.rhs_corollary("odd-main", n),
    ),
    IdentitySpec(
        "cor-residue-1", "ZZ", "(q^4;q^4)_inf S(q) has no terms q^n with n = 1 mod 4",
        lambda n: _P1(n).sieve(4, 1), _zero,
    ),
    IdentitySpec(
        "cor-residue-3", "ZZ", "the n = 3 mod 4 part of (q^4;q^4)_inf S(q) is its whole odd part",
        lambda n: _P1(n).sieve(4, 3), lambda n: _P1(n).sieve(2, 1),
    ),
    IdentitySpec(
        "cor-i-vanish", "ZZ", "a = i: odd part of (q^4;q^4)_inf T(q) vanishes",
        lambda n: _q4("T", n).sieve(2, 1), _zero,
    ),
    IdentitySpec(
        "cor-i-companion", "ZZ", "a = i: (q^4;q^4)_inf T(q) = sum_n (-1)^n q^(6n^2+4n)(1+q^(4n+2)) sum_|j|<=n q^(-2j^2)",
        lambda n: _q4("T", n), lambda n: hecke.rhs_corollary("i-companion", n),
    ),
    IdentitySpec(
        "cor-rho-even", "ZZ", "a = e^(pi i/3): even part of (q^4;q^4)_inf U(q), weights 2cos(pi j/3)",
        lambda n: _q4("U", n).sieve(2, 0), lambda n: hecke.rhs_corollary("rho-even", n),
    ),
    IdentitySpec(
        "cor-rho-odd", "ZZ", "a = e^(pi i/3): odd part of (q^4;q^4)_inf U(q), weights 2cos(pi (j-1)/3)",
        lambda n: _q4("U", n).sieve(2, 1), lambda n: hecke.rhs_corollary("rho-odd", n),
    ),
    IdentitySpec(
        "cor-omega-even", "ZZ", "a = e^(2pi i/3): even part of (q^4;q^4)_inf V(q), weights 2cos(pi j/3)",
        lambda n: _q4("V", n).sieve(2, 0), lambda n: hecke.rhs_corollary("omega-even", n),
    ),
    IdentitySpec(
        "cor-omega-odd", "ZZ", "a = e^(2pi i/3): odd part of (q^4;q^4)_inf V(q), weights 2cos(pi (j+2)/3)",
        lambda n: _q4("V", n).sieve(2, 1), lambda n: hecke.rhs_corollary("omega-odd", n),
    ),
    IdentitySpec(
        "lemma-pentagonal-closed", "ZZ", "D_N(q) from its q-binomial sum equals the signed monomial closed form",
        lambda n: list(_pentagonal_table(n)),
        lambda n: [lemmas.pentagonal_poly_closed(N) for N in range(n + 1)],
        default_order=150, order_meaning="N <= order",
    ),
    IdentitySpec(
        "lemma-pentagonal-recurrence", "ZZ", "D_N = -q^(2-N) D_(N-3)",
        lambda n: list(_pentagonal_table(n)[3:]), _recurrence_rhs,
        default_order=150, order_meaning="3 <= N <= order",
    ),
    IdentitySpec(
        "lemma-tail-coeff", "ZZ",
        f"[z^N] of (q;q)_inf sum_k q^k (z^2q^(k+1);q)_k (-zq^(k+1);q)_inf/(q;q)_k = q^(N(N+1)/2) D_N, N <= {TAIL_Z_DEGREE}",
        lambda n: lemmas.build_L_definition(TAIL_Z_DEGREE, n),
        lambda n: [lemmas.tail_coeff_rhs(N, n, _pentagonal_table(TAIL_Z_DEGREE)[N]) for N in range(TAIL_Z_DEGREE + 1)],
    ),
    IdentitySpec(
        "eq-macmahon", "LAURENT",
        f"(zq;q)_M (1/z;q)_N = sum_j (-1)^j q^(j(j+1)/2) z^j [M+N, N+j] for M, N <= {MACMAHON_SIZE}",
        _left("macmahon"), _right("macmahon"),
        order_meaning="unused (exact polynomials)",
    ),
    IdentitySpec(
        "eq-finite-jacobi-a", "LAURENT",
        f"(aq;q^2)_N (q/a;q^2)_N = sum_h (-1)^h a^h q^(h^2) [2N, N+h]_(q^2) for N <= {JACOBI_SIZE}",
        lambda n: [bailey.finite_jacobi_product(N) for N in range(JACOBI_SIZE + 1)],
        lambda n: [bailey.finite_jacobi_a(N) for N in range(JACOBI_SIZE + 1)],
        order_meaning="unused (exact polynomials)",
    ),
    IdentitySpec(
        "eq-bailey-pair", "LAURENT",
        f"(alpha_R, beta_N) is a Bailey pair at base q^2, denominators cleared, N <= {JACOBI_SIZE}",
        _left("bailey"), _right("bailey"),
        order_meaning="unused (exact polynomials)",
    ),
    IdentitySpec(
        "eq-gamma", "ZZ", f"gamma_R from the conjugate-pair series equals its closed form, R <= {GAMMA_SIZE}",
        lambda n: [bailey.gamma_tail(R, n) for R in range(GAMMA_SIZE + 1)],
        lambda n: [bailey.gamma_closed(R, n) for R in range(GAMMA_SIZE + 1)],
    ),
    IdentitySpec(
        "eq-master", "LAURENT", "(q^4;q^4)_inf S_a(q) = sum_R alpha_R(a) gamma_R",
        bailey.master_sum, _P_a,
    ),
    IdentitySpec(
        "eq-er-tail", "ZZ",
        f"q^(4r^2) gamma_(2r) = (-1)^r q^(-2r^2) sum_(n>=r) (-1)^n q^(6n^2+4n)(1+q^(4n+2)), r <= {ER_TAIL_SIZE}",
        _left("er-tail"), _right("er-tail"),
        default_order=150,
    ),
]


REGISTRY: dict[str, IdentitySpec] = {s.name: s for s in _SPECS}


def get_identity(name: str) -> IdentitySpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}") from None


def _as_list(x) -> list:
    return [x] if isinstance(x, QSeries) else list(x)


def verify(spec: IdentitySpec, order: int) -> VerifyReport:
    if order <= 0:
        raise ValueError("order must be positive")
    start = time.perf_counter()

    def report(status, first=None, message=None):
        ms = int(round((time.perf_counter() - start) * 1000))
        return VerifyReport(spec.name, spec.ring, order, status, first, ms, message)

    try:
        lhs = _as_list(spec.lhs(order))
        rhs = _as_list(spec.rhs(order))
        if len(lhs) != len(rhs):
            return report("error", message=f"sides have {len(lhs)} and {len(rhs)} members")
        family = len(lhs) > 1
        for idx, (f, g) in enumerate(zip(lhs, rhs)):
            up_to = None if f.is_exact and g.is_exact else order
            cmp = series_equal(f, g, up_to)
            if not cmp:
                e = cmp.first_mismatch
                first = {"exponent": e, "lhs": f.ring.render(f[e]), "rhs": g.ring.render(g[e])}
                if family:
                    first["index"] = idx
                return report("mismatch", first)
    except Exception as exc:  # reported, not raised: one bad identity must not hide the rest
        return report("error", message=f"{spec.name}: {type(exc).__name__}: {exc}")
    return report("match")


def verify_named(name: str, order: int | None = None) -> VerifyReport:
    spec = get_identity(name)
    return verify(spec, spec.default_order if order is None else order)
