"""Periodic Hilbert transform on a strip: the singular kernel beta_d, the
theta-constant machinery behind it, and numerical verification of the
identity chain connecting them.

The heavy series loops live in a compiled extension when it is available;
``striphilbert.backend.BACKEND`` says which implementation is active.
"""

from .backend import BACKEND
from .beta import (
    BetaExcess,
    StripGeometry,
    beta_half_excess,
    beta_half_lambert,
    beta_half_raw,
    beta_half_theta,
    beta_kernel_line1,
    beta_kernel_line2,
    limit_identity_check,
    raw_summand_cosh,
    raw_summand_exponential,
    raw_summand_product,
)
from .errors import (
    AliasError,
    DomainError,
    NoConvergence,
    NomeOutOfRange,
    NonPositiveDepth,
    NonPositiveX,
    NonZeroMean,
    Overflow,
    SingularPoint,
    StripHilbertError,
    TolTooSmall,
    TooLarge,
)
from .fourier import FourierSeries, SampledFunction, analyze, sample, synthesize
from .hilbert import (
    PVQuadratureConfig,
    cross_validate,
    hilbert_convolution,
    hilbert_multiplier,
    stable_coth,
)
from .report import VerificationReport
from .theta import (
    Nome,
    TruncationBudget,
    divisor_excess,
    r2_bruteforce,
    theta3,
    theta3_excess,
    theta3_fast,
    two_squares_coefficient_check,
)

__version__ = "0.1.0"

__all__ = [
    "AliasError",
    "BACKEND",
    "BetaExcess",
    "DomainError",
    "FourierSeries",
    "NoConvergence",
    "Nome",
    "NomeOutOfRange",
    "NonPositiveDepth",
    "NonPositiveX",
    "NonZeroMean",
    "Overflow",
    "PVQuadratureConfig",
    "SampledFunction",
    "SingularPoint",
    "StripGeometry",
    "StripHilbertError",
    "TolTooSmall",
    "TooLarge",
    "TruncationBudget",
    "VerificationReport",
    "analyze",
    "beta_half_excess",
    "beta_half_lambert",
    "beta_half_raw",
    "beta_half_theta",
    "beta_kernel_line1",
    "beta_kernel_line2",
    "cross_validate",
    "divisor_excess",
    "hilbert_convolution",
    "hilbert_multiplier",
    "limit_identity_check",
    "r2_bruteforce",
    "raw_summand_cosh",
    "raw_summand_exponential",
    "raw_summand_product",
    "sample",
    "stable_coth",
    "synthesize",
    "theta3",
    "theta3_excess",
    "theta3_fast",
    "two_squares_coefficient_check",
    "__version__",
]
