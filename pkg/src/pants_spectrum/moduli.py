"""From boundary lengths (A, B, C) to normalized generator matrices.

A hyperbolic pair of pants with geodesic boundary is determined by its three
boundary lengths. Here ``a`` and ``b`` go around two of the boundary curves
and ``c = ab`` around the third. The group is normalized so that ``a`` and
``b`` are products of reflections in hyperbolic lines with real endpoints
``(0, inf)``, ``(alpha, 1)`` and ``(beta, gamma)``, with
``0 < alpha < 1 < beta < gamma``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMetricError, DegenerateParamsError, NonPositiveLengthError


@dataclass(frozen=True)
class BoundaryLengths:
    A: float
    B: float
    C: float

    def __post_init__(self):
        for name in ("A", "B", "C"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise NonPositiveLengthError(f"boundary length {name}={v!r} must be positive")

    @classmethod
    def parse(cls, text: str) -> "BoundaryLengths":
        """Parse ``"A,B,C"`` (comma-separated decimals)."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated lengths, got {text!r}")
        return cls(*(float(p) for p in parts))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.A, self.B, self.C)


@dataclass(frozen=True)
class HalfTraces:
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class FenchelParams:
    alpha: float
    beta: float
    gamma: float

    def satisfies_ordering(self) -> bool:
        return 0 < self.alpha < 1 < self.beta < self.gamma


@dataclass(frozen=True, eq=False)
class GeneratorRep:
    """The four letter matrices, indexable by letter code (a, A, b, B)."""

    mat_a: np.ndarray
    mat_b: np.ndarray
    mat_a_inv: np.ndarray
    mat_b_inv: np.ndarray

    def __post_init__(self):
        for m in (self.mat_a, self.mat_b, self.mat_a_inv, self.mat_b_inv):
            m.setflags(write=False)

    @property
    def stack(self) -> np.ndarray:
        """``(4, 2, 2)`` array in letter-code order a, A, b, B."""
        return np.stack([self.mat_a, self.mat_a_inv, self.mat_b, self.mat_b_inv])

    def signed_trace_ab(self) -> float:
        """trace(mat_a @ mat_b); negative in this normalization. Debugging aid only."""
        return float(np.trace(self.mat_a @ self.mat_b))


def half_traces(bl: BoundaryLengths) -> HalfTraces:
    for v in bl.as_tuple():
        if not v > 0:
            raise NonPositiveLengthError(f"boundary length {v!r} must be positive")
    return HalfTraces(math.cosh(bl.A / 2), math.cosh(bl.B / 2), math.cosh(bl.C / 2))


def fenchel_params(ht: HalfTraces) -> FenchelParams:
    """Solve the half-trace relations for the reflection-line endpoints."""
    x, y, z = ht.x, ht.y, ht.z
    if not (x > 1 and y > 1 and z > 1):
        raise DegenerateMetricError(f"half traces must all exceed 1, got {(x, y, z)}")
    numer = (x * y + z) + math.sqrt(x * x + y * y + z * z + 2 * x * y * z - 1)
    fp = FenchelParams(
        alpha=(x - 1) / (x + 1),
        beta=numer / ((x + 1) * (y + 1)),
        gamma=numer / ((x + 1) * (y - 1)),
    )
    if not fp.satisfies_ordering():
        raise DegenerateMetricError(f"0 < alpha < 1 < beta < gamma violated: {fp}")
    return fp


def _adjugate(m: np.ndarray) -> np.ndarray:
    # inverse of a determinant-one 2x2 matrix
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])


def generator_matrices(fp: FenchelParams) -> GeneratorRep:
    al, be, ga = fp.alpha, fp.beta, fp.gamma
    if al == 1 or ga == be:
        raise DegenerateParamsError(f"degenerate endpoints {fp}")
    mat_a = np.array([[1 + al, 2 * al], [2.0, 1 + al]]) / (1 - al)
    mat_b = np.array([[be + ga, -2 * be * ga], [-2.0, be + ga]]) / (ga - be)
    return GeneratorRep(mat_a, mat_b, _adjugate(mat_a), _adjugate(mat_b))


def representation(metric) -> GeneratorRep:
    """Shortcut: boundary lengths (object or 3-tuple) straight to matrices."""
    if not isinstance(metric, BoundaryLengths):
        metric = BoundaryLengths(*metric)
    return generator_matrices(fenchel_params(half_traces(metric)))
