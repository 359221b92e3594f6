"""Sampling runs, exhaustive enumerations and word-length sweeps.

Reproducibility
---------------
Sampled words are drawn in fixed blocks of ``BLOCK_SIZE`` words. Block ``j``
of a run with master seed ``s`` uses its own generator::

    numpy.random.Generator(numpy.random.PCG64(derive_seed(s, j)))

    derive_seed(parent, tag) = splitmix64(splitmix64(parent) ^ tag)

    splitmix64(x):                      # all arithmetic mod 2**64
        x = x + 0x9E3779B97F4A7C15
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9
        x = (x ^ (x >> 27)) * 0x94D049BB133111EB
        return x ^ (x >> 31)

``chunks`` only decides how the blocks are grouped into units of concurrent
work. Results are concatenated in block order, so the vector of lengths, and
with it every statistic, does not depend on ``chunks`` or on scheduling.

A sweep gives word length ``L`` the master seed ``derive_seed(s, L)``.

Words are drawn with replacement and never deduplicated.
"""
from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .errors import ConfigInvalidError, TooFewSamplesError, ZeroVarianceError
from .geometry import batch_lengths
from .moduli import BoundaryLengths, GeneratorRep, representation
from .stats import (
    Histogram,
    LengthSample,
    ScalingEstimate,
    SummaryStats,
    estimate_scaling,
    freedman_diaconis_width,
    histogram,
    summarize,
)
from .words import ENUMERATION_GUARD, count_classes, enumerate_class_codes, sample_codes

BLOCK_SIZE = 4096
_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(parent: int, tag: int) -> int:
    return splitmix64(splitmix64(int(parent) & _MASK64) ^ (int(tag) & _MASK64))


def block_seed(master_seed: int, block_index: int) -> int:
    return derive_seed(master_seed, block_index)


@dataclass(frozen=True)
class ExperimentConfig:
    metric: BoundaryLengths
    L: int
    N: int = 100_000
    mode: str = "sampled"
    master_seed: int = 0
    chunks: int = 1
    bin_width: Optional[float] = None
    enumeration_guard: int = ENUMERATION_GUARD

    def validate(self) -> None:
        if self.mode not in ("sampled", "enumerated"):
            raise ConfigInvalidError(f"mode must be 'sampled' or 'enumerated', not {self.mode!r}")
        if not isinstance(self.L, (int, np.integer)) or self.L < 1:
            raise ConfigInvalidError(f"L must be a positive integer, got {self.L!r}")
        if self.chunks < 1:
            raise ConfigInvalidError("chunks must be >= 1")
        if self.bin_width is not None and not self.bin_width > 0:
            raise ConfigInvalidError("bin_width must be positive")
        if self.mode == "sampled":
            if self.N < 1:
                raise ConfigInvalidError("N must be >= 1 in sampled mode")
            if not 0 <= self.master_seed <= _MASK64:
                raise ConfigInvalidError("master_seed must be a 64-bit unsigned integer")
        elif self.L > self.enumeration_guard:
            raise ConfigInvalidError(
                f"enumerated mode needs L <= {self.enumeration_guard}, got {self.L}"
            )


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    config: ExperimentConfig
    N: int
    stats: SummaryStats
    scaling: ScalingEstimate
    histogram: Histogram
    wall_time_seconds: float
    artifact_version: str = __version__
    lengths: Optional[np.ndarray] = None

    def to_dict(self, timing: bool = False) -> dict:
        c = self.config
        return {
            "config": {
                "A": _num(c.metric.A),
                "B": _num(c.metric.B),
                "C": _num(c.metric.C),
                "L": c.L,
                "N": self.N,
                "mode": c.mode,
                "seed": c.master_seed if c.mode == "sampled" else None,
                "chunks": c.chunks,
            },
            "stats": {
                "mean": _num(self.stats.mean),
                "std": _num(self.stats.sample_std),
                "skewness": _num(self.stats.skewness),
                "excess_kurtosis": _num(self.stats.excess_kurtosis),
                "ks": _num(self.stats.ks_statistic),
            },
            "scaling": {
                "kappa_hat": _num(self.scaling.kappa_hat),
                "sigma_hat": _num(self.scaling.sigma_hat),
                "se_kappa": _num(self.scaling.se_kappa),
                "se_sigma": _num(self.scaling.se_sigma),
                "std_over_L": _num(self.scaling.std_over_L),
            },
            "histogram": {
                "bin_width": _num(self.histogram.bin_width),
                "origin": _num(self.histogram.origin),
                "counts": [int(x) for x in self.histogram.counts],
            },
            "wall_time_s": _num(self.wall_time_seconds) if timing else None,
            "version": self.artifact_version,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, allow_nan=False) + "\n"


def _num(v):
    """12 significant digits; NaN becomes null."""
    if v is None or not math.isfinite(v):
        return None
    return float(f"{v:.12g}")


def block_sizes(N: int) -> list[int]:
    nblocks = -(-N // BLOCK_SIZE)
    return [min(BLOCK_SIZE, N - j * BLOCK_SIZE) for j in range(nblocks)]


def sample_block(L: int, N: int, master_seed: int, j: int) -> np.ndarray:
    """Letter codes of block ``j`` of a sampled run, shape ``(block size, L)``."""
    rng = np.random.Generator(np.random.PCG64(block_seed(master_seed, j)))
    return sample_codes(L, min(BLOCK_SIZE, N - j * BLOCK_SIZE), rng)


def _sampled_lengths(config: ExperimentConfig, rep: GeneratorRep, workers) -> np.ndarray:
    nblocks = len(block_sizes(config.N))

    def work(blocks):
        parts = [
            batch_lengths(sample_block(config.L, config.N, config.master_seed, j), rep)
            for j in blocks
        ]
        return np.concatenate(parts) if parts else np.empty(0)

    groups = np.array_split(np.arange(nblocks), config.chunks)
    return np.concatenate(_map(work, groups, workers))


def _enumerated_lengths(config: ExperimentConfig, rep: GeneratorRep, workers) -> np.ndarray:
    codes = enumerate_class_codes(config.L, config.enumeration_guard)
    groups = np.array_split(codes, config.chunks)
    return np.concatenate(_map(lambda c: batch_lengths(c, rep), groups, workers))


def _map(fn, groups, workers):
    if len(groups) == 1 or workers == 1:
        return [fn(g) for g in groups]
    with ThreadPoolExecutor(max_workers=workers or len(groups)) as pool:
        return list(pool.map(fn, groups))


def _degenerate_stats(v: np.ndarray) -> SummaryStats:
    n = v.size
    mean = math.fsum(v) / n
    std = math.sqrt(math.fsum((v - mean) ** 2) / (n - 1)) if n > 1 else math.nan
    if v.min() == v.max():
        mean, std = float(v[0]), 0.0
    nan = math.nan
    return SummaryStats(mean, std, nan, nan, float(v.min()), float(v.max()), nan)


def run(config: ExperimentConfig, keep_lengths: bool = False, workers: Optional[int] = None) -> ExperimentResult:
    """Compute the length of every sampled or enumerated word and summarize.

    ``workers`` caps the thread pool (default: one thread per chunk);
    ``keep_lengths`` attaches the full length vector to the result.
    """
    config.validate()
    start = time.perf_counter()
    rep = representation(config.metric)
    if config.mode == "sampled":
        values = _sampled_lengths(config, rep, workers)
    else:
        values = _enumerated_lengths(config, rep, workers)
        assert values.size == count_classes(config.L)
    sample = LengthSample(
        values,
        config.L,
        config.metric,
        config.mode,
        config.master_seed if config.mode == "sampled" else None,
    )
    try:
        stats = summarize(sample)
    except (TooFewSamplesError, ZeroVarianceError):
        stats = _degenerate_stats(values)
    if values.size >= 2:
        scaling = estimate_scaling(sample)
    else:
        nan = math.nan
        scaling = ScalingEstimate(float(values[0]) / config.L, nan, nan, nan, nan)
    width = config.bin_width or freedman_diaconis_width(values)
    hist = histogram(values, width)
    elapsed = time.perf_counter() - start
    return ExperimentResult(
        config=config,
        N=int(values.size),
        stats=stats,
        scaling=scaling,
        histogram=hist,
        wall_time_seconds=elapsed,
        lengths=values if keep_lengths else None,
    )


def sweep(config: ExperimentConfig, Ls: Sequence[int], **kwargs) -> list[ExperimentResult]:
    """One :func:`run` per word length, seeded with ``derive_seed(master_seed, L)``."""
    Ls = list(Ls)
    if not Ls:
        raise ConfigInvalidError("sweep needs at least one word length")
    if any(b <= a for a, b in zip(Ls, Ls[1:])):
        raise ConfigInvalidError(f"word lengths must be strictly increasing: {Ls}")
    return [
        run(replace(config, L=L, master_seed=derive_seed(config.master_seed, L)), **kwargs)
        for L in Ls
    ]
