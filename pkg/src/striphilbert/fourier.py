"""Zero-mean 2*pi-periodic functions as trigonometric series and samples.

A :class:`FourierSeries` holds finite coefficient sequences (a_n, b_n),
n = 1..N, representing w(x) = sum a_n cos(nx) + sum b_n sin(nx).  There is no
n = 0 slot, so the mean over a period is zero by construction.  A
:class:`SampledFunction` holds values on the equispaced grid x_j = 2*pi*j/M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import backend
from .errors import AliasError, DomainError, NonZeroMean

TWO_PI = 2.0 * math.pi

MEAN_TOL_FACTOR = 1e-12  # analyze() rejects inputs whose mean exceeds this times max |sample|


def _frozen_array(values: Sequence[float], name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True).reshape(-1)
    if arr.size and not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} coefficients must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FourierSeries:
    """Finite cosine/sine coefficient sequences of equal length N >= 0."""

    cosine: np.ndarray = field(default=())  # type: ignore[assignment]
    sine: np.ndarray = field(default=())  # type: ignore[assignment]

    def __post_init__(self) -> None:
        cos = _frozen_array(self.cosine, "cosine")
        sin = _frozen_array(self.sine, "sine")
        if len(cos) != len(sin):
            raise DomainError(
                "cosine and sine coefficient sequences must have equal length "
                f"(got {len(cos)} and {len(sin)})"
            )
        object.__setattr__(self, "cosine", cos)
        object.__setattr__(self, "sine", sin)

    @property
    def order(self) -> int:
        """Highest harmonic index N carried by this series."""
        return len(self.cosine)

    def is_zero(self) -> bool:
        return bool(np.all(self.cosine == 0.0) and np.all(self.sine == 0.0))

    def describe(self) -> str:
        """Compact text form listing nonzero terms, e.g. ``a2=1 b5=0.3``."""
        parts = []
        for n in range(1, self.order + 1):
            if self.cosine[n - 1] != 0.0:
                parts.append(f"a{n}={self.cosine[n - 1]:g}")
            if self.sine[n - 1] != 0.0:
                parts.append(f"b{n}={self.sine[n - 1]:g}")
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Values on the grid x_j = 2*pi*j/M, j = 0..M-1, with M even, M >= 2."""

    samples: np.ndarray = field(default=())  # type: ignore[assignment]

    def __post_init__(self) -> None:
        arr = _frozen_array(self.samples, "samples")
        if len(arr) < 2 or len(arr) % 2 != 0:
            raise DomainError(f"sample count must be even and >= 2 (got {len(arr)})")
        object.__setattr__(self, "samples", arr)

    @property
    def size(self) -> int:
        return len(self.samples)

    def grid(self) -> np.ndarray:
        return TWO_PI * np.arange(self.size) / self.size

    def mean(self) -> float:
        return math.fsum(self.samples.tolist()) / self.size

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.samples)))


def synthesize(series: FourierSeries, x: float) -> float:
    """Evaluate the series at x, summing highest harmonic first with
    compensated accumulation."""
    return backend.synthesize_value(series.cosine, series.sine, float(x))


def sample(series: FourierSeries, grid_size: int) -> SampledFunction:
    """Evaluate the series on the M-point equispaced grid."""
    if grid_size < 2 or grid_size % 2 != 0:
        raise DomainError(f"grid_size must be even and >= 2 (got {grid_size})")
    xs = TWO_PI * np.arange(grid_size) / grid_size
    return SampledFunction(backend.synthesize_many(series.cosine, series.sine, xs))


def analyze(sampled: SampledFunction, order: int) -> FourierSeries:
    """Discrete Fourier coefficients of equispaced samples.

    Parameters
    ----------
    sampled : SampledFunction
        M equispaced samples; must have mean zero within
        ``MEAN_TOL_FACTOR * max|sample|``.
    order : int
        Number of harmonics N to extract, n = 1..N.  Requires 2N < M.

    Returns
    -------
    FourierSeries
        a_n = (2/M) sum_j s_j cos(n x_j), b_n = (2/M) sum_j s_j sin(n x_j).
        Round-trips band-limited inputs (sample then analyze) to better than
        1e-13 relative.

    Raises
    ------
    AliasError
        If 2 * order >= M.
    NonZeroMean
        If the sample mean check fails.
    """
    if order < 1:
        raise DomainError(f"order must be a positive integer (got {order})")
    m = sampled.size
    if 2 * order >= m:
        raise AliasError(f"need 2N < M to resolve N harmonics (N={order}, M={m})")
    peak = sampled.sup_norm()
    mean = sampled.mean()
    if abs(mean) > MEAN_TOL_FACTOR * peak:
        raise NonZeroMean(
            f"sample mean {mean:.3e} exceeds {MEAN_TOL_FACTOR:g} * max|sample| = "
            f"{MEAN_TOL_FACTOR * peak:.3e}"
        )
    cos_coeffs, sin_coeffs = backend.analyze_coeffs(sampled.samples, order)
    return FourierSeries(cos_coeffs, sin_coeffs)
