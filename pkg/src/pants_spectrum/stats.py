"""Moments, normality diagnostics, scaling estimators and histograms of length samples.

The scaling estimators follow the square-root normalization: with sample
mean ``m`` and sample standard deviation ``s`` at word length ``L``,

    kappa_hat = m / L          sigma_hat = s / sqrt(L)

``std_over_L`` (``s / L``) is reported alongside so the linear reading of the
fluctuation scale can be inspected as well.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.special import ndtr

from .errors import (
    CombUndefinedError,
    EmptySampleError,
    SpacingTooFineError,
    TooFewSamplesError,
    ZeroVarianceError,
)
from .moduli import BoundaryLengths

MIN_SUMMARY_SIZE = 8


@dataclass(frozen=True, eq=False)
class LengthSample:
    values: np.ndarray
    L: int
    metric: Optional[BoundaryLengths] = None
    mode: str = "sampled"
    seed: Optional[int] = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise ValueError("values must be one-dimensional")
        if np.any(~(values > 0)):
            raise ValueError("geodesic lengths must be positive")
        object.__setattr__(self, "values", values)

    @property
    def N(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    sample_std: float
    skewness: float
    excess_kurtosis: float
    min: float
    max: float
    ks_statistic: float


@dataclass(frozen=True)
class ScalingEstimate:
    kappa_hat: float
    sigma_hat: float
    se_kappa: float
    se_sigma: float
    std_over_L: float


@dataclass(frozen=True, eq=False)
class Histogram:
    """Right-open bins ``[origin + k*w, origin + (k+1)*w)``."""

    bin_width: float
    origin: float
    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "counts", np.asarray(self.counts, dtype=np.int64))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def edges(self) -> np.ndarray:
        return self.origin + self.bin_width * np.arange(self.counts.size + 1)

    @property
    def bins(self) -> list[tuple[float, int]]:
        return [(float(lo), int(c)) for lo, c in zip(self.edges[:-1], self.counts)]

    def __eq__(self, other):
        return (
            isinstance(other, Histogram)
            and self.bin_width == other.bin_width
            and self.origin == other.origin
            and np.array_equal(self.counts, other.counts)
        )


def _values(s) -> np.ndarray:
    if isinstance(s, LengthSample):
        return s.values
    return np.asarray(s, dtype=float)


def _central_moments(v: np.ndarray):
    n = v.size
    mean = math.fsum(v) / n
    d = v - mean
    d2 = d * d
    return mean, math.fsum(d2) / n, math.fsum(d2 * d) / n, math.fsum(d2 * d2) / n


def lilliefors_statistic(v: np.ndarray, mean: float, std: float) -> float:
    """KS distance between the standardized sample and N(0, 1)."""
    n = v.size
    cdf = ndtr((np.sort(v) - mean) / std)
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - cdf)
    d_minus = np.max(cdf - (i - 1) / n)
    return float(min(1.0, max(d_plus, d_minus)))


def summarize(s) -> SummaryStats:
    """Mean, sample std (N-1), adjusted skewness G1 and excess kurtosis G2, KS statistic.

    Accepts a :class:`LengthSample` or any 1-d array of values.
    """
    v = _values(s)
    n = v.size
    if n < MIN_SUMMARY_SIZE:
        raise TooFewSamplesError(f"need at least {MIN_SUMMARY_SIZE} values, got {n}")
    vmin, vmax = float(v.min()), float(v.max())
    if vmin == vmax:
        raise ZeroVarianceError("all values are equal")
    mean, m2, m3, m4 = _central_moments(v)
    std = math.sqrt(m2 * n / (n - 1))
    g1 = m3 / m2**1.5
    g2 = m4 / m2**2 - 3
    skew = g1 * math.sqrt(n * (n - 1)) / (n - 2)
    kurt = ((n + 1) * g2 + 6) * (n - 1) / ((n - 2) * (n - 3))
    return SummaryStats(
        mean=mean,
        sample_std=std,
        skewness=skew,
        excess_kurtosis=kurt,
        min=vmin,
        max=vmax,
        ks_statistic=lilliefors_statistic(v, mean, std),
    )


def estimate_scaling(s, L: Optional[int] = None) -> ScalingEstimate:
    """kappa_hat, sigma_hat and their closed-form standard errors.

    ``L`` is taken from the sample when ``s`` is a :class:`LengthSample`.
    A constant sample gives ``sigma_hat = 0`` (and zero standard errors).
    """
    v = _values(s)
    if L is None:
        if not isinstance(s, LengthSample):
            raise ValueError("word length L is required for a bare array")
        L = s.L
    n = v.size
    if n < 2:
        raise TooFewSamplesError(f"need at least 2 values, got {n}")
    if L < 1:
        raise ValueError("L must be >= 1")
    if v.min() == v.max():
        mean, std = float(v[0]), 0.0
    else:
        mean, m2, _, _ = _central_moments(v)
        std = math.sqrt(m2 * n / (n - 1))
    return ScalingEstimate(
        kappa_hat=mean / L,
        sigma_hat=std / math.sqrt(L),
        se_kappa=std / (math.sqrt(n) * L),
        se_sigma=std / (math.sqrt(2 * (n - 1)) * math.sqrt(L)),
        std_over_L=std / L,
    )


def freedman_diaconis_width(values) -> float:
    """2 * IQR * N^(-1/3), rounded to one significant digit."""
    v = _values(values)
    if v.size == 0:
        raise EmptySampleError("empty sample")
    q75, q25 = np.percentile(v, [75, 25])
    w = 2 * (q75 - q25) * v.size ** (-1 / 3)
    if not w > 0:
        spread = float(v.max() - v.min())
        w = spread / 10 if spread > 0 else 1.0
    return float(f"{w:.0e}")


def histogram(s, bin_width: float) -> Histogram:
    v = _values(s)
    if v.size == 0:
        raise EmptySampleError("cannot bin an empty sample")
    if not bin_width > 0:
        raise ValueError("bin_width must be positive")
    origin = bin_width * math.floor(v.min() / bin_width)
    idx = np.floor((v - origin) / bin_width).astype(np.int64)
    # undo rounding at bin edges so that lo <= v < lo + w holds exactly
    lo = origin + idx * bin_width
    idx[lo > v] -= 1
    idx[origin + (idx + 1) * bin_width <= v] += 1
    idx = np.maximum(idx, 0)
    return Histogram(bin_width, origin, np.bincount(idx))


# mass cut from each tail; central 90% of the histogram
CENTRAL_TAIL = 0.05


def _central_bins(counts: np.ndarray) -> slice:
    """Bins from the one where cumulative mass passes 5% to the one reaching 95%."""
    cum = np.cumsum(counts)
    total = cum[-1]
    first = int(np.searchsorted(cum, CENTRAL_TAIL * total, side="right"))
    last = int(np.searchsorted(cum, (1 - CENTRAL_TAIL) * total, side="left"))
    return slice(first, last + 1)


def comb_bins(h: Histogram, spacing: float) -> np.ndarray:
    """Mask of bins whose range [lo, lo + w) contains an integer multiple of ``spacing``."""
    lo = h.edges[:-1]
    k = np.ceil(lo / spacing - 1e-9)
    return k * spacing < lo + h.bin_width * (1 - 1e-9)


def comb_score(h: Histogram, spacing: float) -> float:
    """Relative excess of mass in bins sitting on multiples of ``spacing``.

    Both the comb bins and the reference bins are restricted to the bins that
    hold the central 90% of the mass, so thin tails do not dilute the score::

        mean(count on comb bins) / mean(count on all central bins) - 1

    Zero for a flat histogram, positive when mass piles up at the multiples.
    """
    if not spacing > 2 * h.bin_width:
        raise SpacingTooFineError(
            f"spacing {spacing} must exceed twice the bin width {h.bin_width}"
        )
    if h.total == 0:
        raise EmptySampleError("empty histogram")
    central = _central_bins(h.counts)
    counts = h.counts[central].astype(float)
    on_comb = comb_bins(h, spacing)[central]
    if not on_comb.any():
        raise CombUndefinedError(f"no multiple of {spacing} inside the central mass")
    return float(counts[on_comb].mean() / counts.mean() - 1)
