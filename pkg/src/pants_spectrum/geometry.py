"""Geodesic length of a cyclic word.

The word is mapped letter by letter to the generator matrices (a -> mat_a,
A -> mat_a_inv, b -> mat_b, B -> mat_b_inv) and multiplied left to right. The
closed geodesic in that free homotopy class has length ``l`` with
``cosh(l/2) = |trace|/2``.

Entries of the product grow like exp(l/2), so the product is kept as a
normalized matrix times ``exp(log_scale)``, rescaling by the largest absolute
entry after every multiplication. The trace is then read off in log space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GuardExceededError, NonHyperbolicTraceError, OverflowDetectedError
from .moduli import GeneratorRep
from .words import CyclicWord

# below this half trace the plain arccosh is used, above it the log expansion
LOG_CROSSOVER = math.log(10.0)
# |trace| <= 2 + HYPERBOLIC_MARGIN is treated as non-hyperbolic
HYPERBOLIC_MARGIN = 1e-12
DIRECT_GUARD = 200


@dataclass(frozen=True, eq=False)
class LogMatrix:
    """``exp(log_scale) * m`` with ``max|m| == 1`` after renormalization."""

    m: np.ndarray
    log_scale: float

    def to_matrix(self) -> np.ndarray:
        return math.exp(self.log_scale) * self.m

    def log_det(self) -> float:
        """log of the determinant of the represented matrix (0 for products of generators).

        det(m) is exp(-2 * log_scale), computed from entries of order one, so the
        value is meaningful only while that is well above rounding (log_scale of
        a few units). NaN once the determinant has cancelled to nothing.
        """
        d = float(np.linalg.det(self.m))
        return math.log(d) + 2 * self.log_scale if d > 0 else math.nan

    def log_half_trace(self) -> float:
        return self.log_scale + math.log(abs(float(self.m[0, 0] + self.m[1, 1])) / 2)


@dataclass(frozen=True)
class GeodesicLength:
    value: float
    log_half_trace: float

    def __float__(self) -> float:
        return self.value


def _entries(rep: GeneratorRep) -> list[tuple[float, float, float, float]]:
    return [tuple(float(v) for v in m.ravel()) for m in rep.stack]


def _renormalize(e00, e01, e10, e11):
    s = max(abs(e00), abs(e01), abs(e10), abs(e11))
    return e00 / s, e01 / s, e10 / s, e11 / s, math.log(s)


def log_product(w: CyclicWord, rep: GeneratorRep) -> LogMatrix:
    table = _entries(rep)
    it = iter(w.letters)
    e00, e01, e10, e11 = table[next(it)]
    e00, e01, e10, e11, log_scale = _renormalize(e00, e01, e10, e11)
    for letter in it:
        g00, g01, g10, g11 = table[letter]
        e00, e01, e10, e11 = (
            e00 * g00 + e01 * g10,
            e00 * g01 + e01 * g11,
            e10 * g00 + e11 * g10,
            e10 * g01 + e11 * g11,
        )
        e00, e01, e10, e11, ds = _renormalize(e00, e01, e10, e11)
        log_scale += ds
    return LogMatrix(np.array([[e00, e01], [e10, e11]]), log_scale)


def _length_from_half_trace(half_trace: float, log_scale: float) -> GeodesicLength:
    log_half_trace = log_scale + math.log(half_trace)
    if log_half_trace <= LOG_CROSSOVER:
        t = half_trace * math.exp(log_scale)
        if not t > 1 + HYPERBOLIC_MARGIN / 2:
            raise NonHyperbolicTraceError(f"|trace|/2 = {t!r} is not > 1")
        return GeodesicLength(2 * math.acosh(t), log_half_trace)
    value = 2 * (log_half_trace + math.log1p(math.sqrt(-math.expm1(-2 * log_half_trace))))
    return GeodesicLength(value, log_half_trace)


def geodesic_length(w: CyclicWord, rep: GeneratorRep) -> GeodesicLength:
    """Length of the closed geodesic in the class of ``w``; safe for any word length."""
    lm = log_product(w, rep)
    half = abs(float(lm.m[0, 0] + lm.m[1, 1])) / 2
    if half == 0:
        raise NonHyperbolicTraceError("trace vanished")
    return _length_from_half_trace(half, lm.log_scale)


def length_direct(w: CyclicWord, rep: GeneratorRep, max_length: int = DIRECT_GUARD) -> GeodesicLength:
    """Same as :func:`geodesic_length` via a plain double product. Test oracle."""
    if len(w) > max_length:
        raise GuardExceededError(f"direct product limited to L <= {max_length}")
    table = _entries(rep)
    it = iter(w.letters)
    e00, e01, e10, e11 = table[next(it)]
    for letter in it:
        g00, g01, g10, g11 = table[letter]
        e00, e01, e10, e11 = (
            e00 * g00 + e01 * g10,
            e00 * g01 + e01 * g11,
            e10 * g00 + e11 * g10,
            e10 * g01 + e11 * g11,
        )
        if not all(map(math.isfinite, (e00, e01, e10, e11))):
            raise OverflowDetectedError("matrix entries overflowed double precision")
    t = abs(e00 + e11) / 2
    if not math.isfinite(t):
        raise OverflowDetectedError("trace overflowed double precision")
    if not t > 1 + HYPERBOLIC_MARGIN / 2:
        raise NonHyperbolicTraceError(f"|trace|/2 = {t!r} is not > 1")
    return GeodesicLength(2 * math.acosh(t), math.log(t))


def batch_lengths(codes: np.ndarray, rep: GeneratorRep) -> np.ndarray:
    """Geodesic lengths for an ``(n, L)`` array of letter codes, vectorized over rows.

    Same arithmetic as :func:`geodesic_length`, one column at a time.
    """
    codes = np.asarray(codes)
    n, L = codes.shape
    if n == 0:
        return np.empty(0)
    table = rep.stack.reshape(4, 4)
    e = table[codes[:, 0]].T.copy()
    s = np.abs(e).max(axis=0)
    e /= s
    log_scale = np.log(s)
    for i in range(1, L):
        g = table[codes[:, i]].T
        e = np.stack([
            e[0] * g[0] + e[1] * g[2],
            e[0] * g[1] + e[1] * g[3],
            e[2] * g[0] + e[3] * g[2],
            e[2] * g[1] + e[3] * g[3],
        ])
        s = np.abs(e).max(axis=0)
        e /= s
        log_scale += np.log(s)

    half = np.abs(e[0] + e[3]) / 2
    with np.errstate(divide="ignore"):
        lht = log_scale + np.log(half)
    out = np.empty(n)
    small = lht <= LOG_CROSSOVER
    if small.any():
        t = half[small] * np.exp(log_scale[small])
        if not np.all(t > 1 + HYPERBOLIC_MARGIN / 2):
            raise NonHyperbolicTraceError(f"|trace|/2 = {t.min()!r} is not > 1")
        out[small] = 2 * np.arccosh(t)
    big = ~small
    out[big] = 2 * (lht[big] + np.log1p(np.sqrt(-np.expm1(-2 * lht[big]))))
    return out
