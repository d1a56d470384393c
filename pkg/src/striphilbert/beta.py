"""The singular convolution kernel of the strip Hilbert transform.

The kernel beta_d is odd, 2*pi-periodic, and behaves like 2/s at the origin.
This module evaluates it two ways (a hyperbolic image series and a symmetric
translated-coth partial sum) and evaluates the distinguished value
beta_d(pi/2), as a function of the half-period parameter x = pi^2/(2d), by
three independent routes:

* ``beta_half_raw``      the hyperbolic series in x,
* ``beta_half_lambert``  the q-series rearrangement with q = e^{-x},
* ``beta_half_theta``    the closed form theta3(0, e^{-pi^2/x})^2.

The three routes share no code, which is what makes their mutual agreement a
meaningful check.  ``beta_half_excess`` exposes beta - 1 in log space; near
x = 0 the excess is about 4 e^{-pi^2/x}, far below 1 ulp of beta itself, so
subtraction from the plain value would lose it entirely.

Convention: x = pi^2/(2d).  Substituting s = pi/2 into the image series
reproduces the raw half-period formula exactly under this convention, and
``verify conjecture`` re-derives that numerically at runtime rather than
taking it on faith (the rival reading x = pi^2/d fails the same comparison
by a wide margin).
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from . import backend
from .errors import DomainError, NonPositiveX, SingularPoint, TolTooSmall
from .report import VerificationReport
from .theta import theta3_excess, theta3_fast

TWO_PI = 2.0 * math.pi
_EPS = sys.float_info.epsilon
_LN2 = math.log(2.0)
_LN10 = math.log(10.0)
_MIN_NORMAL = sys.float_info.min


@dataclass(frozen=True)
class StripGeometry:
    """Strip depth d > 0 with its derived half-period parameter and nome.

    x = pi^2/(2d) and q = e^{-pi^2/x} = e^{-2d}; x * 2d = pi^2 holds to
    machine precision by construction.
    """

    d: float
    x: float
    q: float

    def __post_init__(self) -> None:
        if not self.d > 0.0 or math.isinf(self.d) or math.isnan(self.d):
            raise DomainError(f"depth must be positive and finite (got {self.d!r})")

    @classmethod
    def from_depth(cls, d: float) -> "StripGeometry":
        d = float(d)
        if not d > 0.0 or math.isinf(d) or math.isnan(d):
            raise DomainError(f"depth must be positive and finite (got {d!r})")
        return cls(d=d, x=math.pi * math.pi / (2.0 * d), q=math.exp(-2.0 * d))

    @classmethod
    def from_half_period(cls, x: float) -> "StripGeometry":
        x = float(x)
        if not x > 0.0 or math.isinf(x) or math.isnan(x):
            raise NonPositiveX(f"x must be positive and finite (got {x!r})")
        d = math.pi * math.pi / (2.0 * x)
        return cls(d=d, x=x, q=math.exp(-2.0 * d))


def _check_not_singular(s: float) -> None:
    if s == 0.0 or math.fmod(s, TWO_PI) == 0.0:
        raise SingularPoint(f"kernel has a pole at s = {s!r} (a multiple of 2*pi)")


def beta_kernel_line1(s: float, geometry: StripGeometry, tol: float = 1e-12) -> float:
    """Kernel value by the image series

        -s/d + (pi/d) coth(pi s / 2d)
             + (pi/d) sum_{n>=1} 2 sinh(pi s/d) / (cosh(pi s/d) - cosh(2 pi^2 n/d)),

    valid for s in (-2*pi, 2*pi) away from 0.  Terms are evaluated in factored
    exponential form (no overflow; see the kernel backend) and truncated once
    a geometric tail majorant falls below ``tol``.

    Every summand is odd in s, so the value at -s is exactly the negated
    value at s.
    """
    s = float(s)
    if math.isnan(s):
        raise DomainError("s must be a real number")
    _check_not_singular(s)
    if not -TWO_PI < s < TWO_PI:
        raise DomainError(f"image series requires |s| < 2*pi (got s={s!r})")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive (got {tol!r})")
    value = backend.beta_kernel_series(abs(s), geometry.d, tol)
    if tol < 4.0 * _EPS * abs(value):
        raise TolTooSmall(
            f"tol={tol:g} is below 4 ulp of the kernel value {value:g}"
        )
    return value if s > 0.0 else -value


def beta_kernel_line2(s: float, geometry: StripGeometry, terms: int) -> float:
    """Kernel value by the symmetric translated-coth partial sum

        -s/d + (pi/d) sum_{|n|<=terms} { coth(pi (s - 2 pi n) / 2d) + sgn(n) },

    with sgn(0) = 0.  Valid for any real s not a multiple of 2*pi; converges
    to :func:`beta_kernel_line1` as terms grows (geometrically, with ratio
    e^{-2 pi^2/d}).
    """
    s = float(s)
    if math.isnan(s):
        raise DomainError("s must be a real number")
    _check_not_singular(s)
    if terms < 0:
        raise DomainError(f"terms must be >= 0 (got {terms})")
    return backend.beta_line2_sum(s, geometry.d, int(terms))


def beta_half_raw(x: float, tol: float = 1e-12) -> float:
    """beta_d(pi/2) from the hyperbolic series in x = pi^2/(2d):

        (1/pi) [ 2x coth(x/2) - x - 4x sinh(x) sum_{n>=1} 1/(cosh(4nx) - cosh(x)) ].

    Compensated summation in factored exponential form; the term count grows
    like 1/x, so for x below about 0.05 prefer :func:`beta_half_theta` or
    :func:`beta_half_excess` (the value is 1 to tens of digits there anyway).
    """
    if not x > 0.0 or math.isnan(x):
        raise NonPositiveX(f"x must be positive (got {x!r})")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive (got {tol!r})")
    if tol < 4.0 * _EPS:
        raise TolTooSmall(f"tol={tol:g} is below 4 ulp of a value near 1")
    return backend.beta_half_raw_sum(float(x), tol)


def beta_half_lambert(x: float, tol: float = 1e-12) -> float:
    """beta_d(pi/2) from the rearranged q-series, q = e^{-x}:

        (x/pi) [ 1 + 4 sum_{n>=1} ( q^{4n-3}/(1-q^{4n-3}) - q^{4n-1}/(1-q^{4n-1}) ) ].

    Each positive/negative pair is fused before accumulation, so the partial
    sums are monotone and cancellation-free.
    """
    if not x > 0.0 or math.isnan(x):
        raise NonPositiveX(f"x must be positive (got {x!r})")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive (got {tol!r})")
    if tol < 4.0 * _EPS:
        raise TolTooSmall(f"tol={tol:g} is below 4 ulp of a value near 1")
    return backend.beta_half_lambert_sum(float(x), tol)


def beta_half_theta(x: float) -> float:
    """beta_d(pi/2) in closed form: theta3(0, e^{-pi^2/x})^2.

    Always >= 1, strictly increasing in x.  Evaluated through the
    fast-nome branch, so the cost is a handful of series terms for any x.
    """
    if not x > 0.0 or math.isnan(x):
        raise NonPositiveX(f"x must be positive (got {x!r})")
    y = math.pi * math.pi / x
    # theta3(0, e^{-y}) is about sqrt(pi/y) for small y; keep tol above 4 ulp
    scale = max(1.0, math.sqrt(math.pi / y))
    value = theta3_fast(y, tol=16.0 * _EPS * scale)
    return value * value


@dataclass(frozen=True)
class BetaExcess:
    """beta_d(pi/2) - 1 in log space, plus the direct value when it exists.

    ``excess`` is None when the true excess lies below the smallest positive
    normal double (x below roughly 0.014).
    """

    log10_excess: float
    excess: float | None


def beta_half_excess(x: float) -> BetaExcess:
    """Cancellation-free beta_d(pi/2) - 1.

    Writing E = theta3(0, q') - 1 with q' = e^{-pi^2/x}, the excess is
    E (theta3 + 1) = E (2 + E).  log10 is assembled in log space from the
    leading term 4 q' and a log-sum-exp correction over the higher powers
    q'^{n^2 - 1}, so the result is finite and strictly negative-or-positive
    even when q' itself underflows.
    """
    if not x > 0.0 or math.isnan(x):
        raise NonPositiveX(f"x must be positive (got {x!r})")
    log_nome = -math.pi * math.pi / x
    # correction sum_{n>=2} q'^{n^2-1}; converges in ~sqrt(4.7 x) terms
    sigma_total, sigma_comp = 0.0, 0.0
    n = 2
    while True:
        term = math.exp((n * n - 1) * log_nome)
        if term < 1e-20 * (1.0 + sigma_total):
            break
        t = sigma_total + term
        sigma_comp += (sigma_total - t) + term if abs(sigma_total) >= term else (term - t) + sigma_total
        sigma_total = t
        n += 1
        if n > 5_000_000:  # would need x beyond ~1e12
            raise DomainError(f"x={x:g} is beyond the supported range")
    sigma = sigma_total + sigma_comp
    ln_e = _LN2 + log_nome + math.log1p(sigma)          # ln(theta3 - 1)
    e_direct = math.exp(ln_e) if ln_e > -745.0 else 0.0
    ln_excess = _LN2 + ln_e + math.log1p(0.5 * e_direct)  # ln(E (2 + E))
    log10_excess = ln_excess / _LN10

    excess: float | None = None
    nome = math.exp(log_nome)  # underflows to 0.0 harmlessly
    if nome > 0.0:
        scale = max(1.0, math.sqrt(x / math.pi))
        e_series = theta3_excess(nome, tol=max(1e-13, 16.0 * _EPS * scale))
        candidate = e_series * (2.0 + e_series)
        if candidate >= _MIN_NORMAL:
            excess = candidate
    return BetaExcess(log10_excess=log10_excess, excess=excess)


def limit_identity_check(terms: int) -> VerificationReport:
    """Check 4 - 8 sum_{n<=terms} 1/(16 n^2 - 1) against pi.

    The omitted tail telescopes below 1/(16 * terms), so the residual must be
    at most 1/(2 * terms); the report fails otherwise.
    """
    if terms < 1:
        raise DomainError(f"terms must be >= 1 (got {terms})")
    partial = backend.limit_partial_sum(int(terms))
    computed = 4.0 - 8.0 * partial
    tolerance = 1.0 / (2.0 * terms)
    return VerificationReport.from_values(
        f"limit_identity[n<={terms}]",
        computed=computed,
        reference=math.pi,
        tolerance=tolerance,
    )


# ---------------------------------------------------------------------------
# termwise forms of the hyperbolic summand (diagnostics for the raw series)
# ---------------------------------------------------------------------------

def raw_summand_cosh(x: float, n: int) -> float:
    """2 sinh(x) / (cosh(4nx) - cosh(x)), literal form.

    Overflows once 4nx exceeds about 710; intended for termwise comparison
    in the range where it is representable.
    """
    return 2.0 * math.sinh(x) / (math.cosh(4.0 * n * x) - math.cosh(x))


def raw_summand_product(x: float, n: int) -> float:
    """sinh(x) / (sinh((4n+1)x/2) sinh((4n-1)x/2)).

    Equals :func:`raw_summand_cosh` through the difference-to-product rule
    cosh a - cosh b = 2 sinh((a+b)/2) sinh((a-b)/2).
    """
    return math.sinh(x) / (math.sinh((4.0 * n + 1.0) * x / 2.0) * math.sinh((4.0 * n - 1.0) * x / 2.0))


def raw_summand_exponential(x: float, n: int) -> float:
    """2 e^{-(4n-1)x} (1-e^{-2x}) / ((1-e^{-(4n+1)x})(1-e^{-(4n-1)x})).

    The overflow-free factorisation actually used inside the series sums;
    algebraically identical to the other two forms for every x > 0, n >= 1.
    """
    return (
        2.0
        * math.exp(-(4.0 * n - 1.0) * x)
        * (-math.expm1(-2.0 * x))
        / ((-math.expm1(-(4.0 * n + 1.0) * x)) * (-math.expm1(-(4.0 * n - 1.0) * x)))
    )
