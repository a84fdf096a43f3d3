"""Exact q-series engine for checking Hecke-type double-sum identities."""
from .rings import GAUSS, LAURENT, PRIM3, PRIM6, ZZ, CyclotomicElem, LaurentA, RingMismatchError, get_ring
from .series import (
    QSeries,
    TruncationError,
    coeff,
    pochhammer,
    pochhammer_inf,
    qbinom,
    series_equal,
    sieve,
)

__version__ = "0.1.0"

__all__ = [
    "ZZ",
    "LAURENT",
    "GAUSS",
    "PRIM6",
    "PRIM3",
    "LaurentA",
    "CyclotomicElem",
    "RingMismatchError",
    "get_ring",
    "QSeries",
    "TruncationError",
    "coeff",
    "sieve",
    "series_equal",
    "pochhammer",
    "pochhammer_inf",
    "qbinom",
]
