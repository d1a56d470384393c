"""The theta constant sum_{n in Z} q^{n^2}, its modular transformation, and
the exact two-squares coefficient machinery.

Only the value at the origin for a real nome q in [0, 1) is provided.  The
square of the series generates r2(n), the number of ordered representations
of n as a sum of two integer squares (counting signs), and coefficientwise

    (sum_n q^{n^2})^2 = 1 + 4 sum_{n>=1} (q^{4n-3}/(1-q^{4n-3})
                                          - q^{4n-1}/(1-q^{4n-1})),

equivalently r2(m) = 4 (d1(m) - d3(m)) with d1/d3 the number of divisors
congruent to 1/3 mod 4.  :func:`two_squares_coefficient_check` certifies that
identity degree by degree in exact integer arithmetic.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from . import backend
from .errors import DomainError, NomeOutOfRange, NonPositiveX, TolTooSmall, TooLarge
from .report import VerificationReport

_EPS = sys.float_info.epsilon

INTEGER_GUARD = 10**6  # desk-scale cap for the exact integer oracles
CHECK_GUARD = 10**4    # cap for the degree-by-degree coefficient check


@dataclass(frozen=True)
class Nome:
    """A real nome q with 0 <= q < 1."""

    q: float

    def __post_init__(self) -> None:
        q = float(self.q)
        if not (0.0 <= q < 1.0) or math.isnan(q):
            raise NomeOutOfRange(f"nome must satisfy 0 <= q < 1 (got {self.q!r})")
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class TruncationBudget:
    """Requested tolerance versus what a truncated series actually achieved."""

    tol: float
    terms_used: int
    tail_bound: float

    def __post_init__(self) -> None:
        if not self.tol > 0.0:
            raise DomainError(f"tol must be positive (got {self.tol!r})")
        if self.terms_used < 0:
            raise DomainError("terms_used must be non-negative")
        if not 0.0 <= self.tail_bound <= self.tol:
            raise DomainError(
                f"tail bound {self.tail_bound!r} does not meet tol {self.tol!r}"
            )


def _as_nome(q: "Nome | float") -> float:
    return q.q if isinstance(q, Nome) else Nome(float(q)).q


def _check_tol(tol: float, value_scale: float) -> None:
    if not tol > 0.0:
        raise DomainError(f"tol must be positive (got {tol!r})")
    if tol < 4.0 * _EPS * value_scale:
        raise TolTooSmall(
            f"tol={tol:g} is below 4 ulp of the result (scale {value_scale:g})"
        )


def theta3(q: "Nome | float", tol: float = 1e-12) -> tuple[float, TruncationBudget]:
    """Evaluate 1 + 2 sum_{n>=1} q^{n^2} to absolute tolerance tol.

    Truncates at the first N whose proven geometric tail majorant
    2 q^{N^2} / (1 - q^{2N+1}) is <= tol.  The returned budget records the
    term count and that majorant.

    Raises NomeOutOfRange for q outside [0, 1) and TolTooSmall when tol is
    less than 4 ulp of the value.
    """
    qv = _as_nome(q)
    # theta3(0, e^{-x}) >= sqrt(pi/x), so the value scale is known up front
    scale = 1.0 if qv == 0.0 else max(1.0, math.sqrt(math.pi / -math.log(qv)))
    _check_tol(tol, scale)
    value, terms, tail = backend.theta3_sum(qv, tol)
    _check_tol(tol, value)
    return value, TruncationBudget(tol=tol, terms_used=terms, tail_bound=tail)


def theta3_excess(q: "Nome | float", tol: float = 1e-12) -> float:
    """Evaluate theta3(0, q) - 1 = 2 sum_{n>=1} q^{n^2} without cancellation.

    The first term 2q is always included, so the result is strictly positive
    for q > 0 and satisfies 2q <= result <= 2q/(1 - q^3).
    """
    qv = _as_nome(q)
    scale = 1.0 if qv == 0.0 else max(1.0, math.sqrt(math.pi / -math.log(qv)))
    _check_tol(tol, scale)
    excess, _, _ = backend.theta3_excess_sum(qv, tol)
    _check_tol(tol, 1.0 + excess)
    return excess


def theta3_fast(x: float, tol: float = 1e-12) -> float:
    """theta3(0, e^{-x}) for x > 0, with the modular transformation applied
    whenever it pays.

    For x >= pi the series at q = e^{-x} is summed directly; for x < pi the
    identity sqrt(x) theta3(0, e^{-x}) = sqrt(pi) theta3(0, e^{-pi^2/x})
    moves the evaluation to the dual nome.  Either way the working nome is
    at most e^{-pi} (about 0.0432), so a handful of terms give full double
    precision.
    """
    if not x > 0.0 or math.isnan(x):
        raise NonPositiveX(f"x must be positive (got {x!r})")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive (got {tol!r})")
    if x >= math.pi:
        value, _, _ = backend.theta3_sum(math.exp(-x), tol)
        return value
    factor = math.sqrt(math.pi / x)
    inner_tol = max(tol / factor, 4.0 * _EPS)
    value, _, _ = backend.theta3_sum(math.exp(-math.pi * math.pi / x), inner_tol)
    return factor * value


def r2_bruteforce(n: int) -> int:
    """Exact count of integer pairs (a, b) with a^2 + b^2 = n.

    Enumerates a in [-isqrt(n), isqrt(n)] and tests n - a^2 for squareness;
    pure integer arithmetic.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative (got {n})")
    if n > INTEGER_GUARD:
        raise TooLarge(f"n={n} exceeds the desk-scale guard {INTEGER_GUARD}")
    if n == 0:
        return 1
    count = 0
    for a in range(-math.isqrt(n), math.isqrt(n) + 1):
        rest = n - a * a
        b = math.isqrt(rest)
        if b * b == rest:
            count += 2 if b > 0 else 1
    return count


def divisor_excess(n: int) -> int:
    """d1(n) - d3(n): divisors congruent to 1 mod 4 minus those 3 mod 4."""
    if n < 1:
        raise DomainError(f"n must be positive (got {n})")
    if n > INTEGER_GUARD:
        raise TooLarge(f"n={n} exceeds the desk-scale guard {INTEGER_GUARD}")
    excess = 0
    for small in range(1, math.isqrt(n) + 1):
        if n % small:
            continue
        large = n // small
        for divisor in (small, large) if small != large else (small,):
            r = divisor % 4
            if r == 1:
                excess += 1
            elif r == 3:
                excess -= 1
    return excess


def _square_convolution(limit: int) -> list[int]:
    """Coefficients of (sum_{n in Z} q^{n^2})^2 up to degree ``limit``.

    The base sequence has coefficient 1 at degree 0 and 2 at every positive
    perfect square; squaring is a sparse integer convolution.
    """
    out = [0] * (limit + 1)
    root = math.isqrt(limit)
    for a in range(root + 1):
        wa = 1 if a == 0 else 2
        aa = a * a
        if aa > limit:
            break
        for b in range(root + 1):
            m = aa + b * b
            if m > limit:
                break
            out[m] += wa * (1 if b == 0 else 2)
    return out


def two_squares_coefficient_check(limit: int) -> VerificationReport:
    """Certify r2(m) = 4 (d1(m) - d3(m)) for 1 <= m <= limit, plus r2(0) = 1.

    Both sides are built independently in exact integer arithmetic: the left
    as the convolution square of the theta coefficient sequence, cross-checked
    against the lattice enumeration of :func:`r2_bruteforce`; the right from
    :func:`divisor_excess`.  Any disagreement at any degree is a hard failure
    (tolerance zero), never a tolerance miss.
    """
    if limit < 1:
        raise DomainError(f"limit must be positive (got {limit})")
    if limit > CHECK_GUARD:
        raise TooLarge(f"limit={limit} exceeds the guard {CHECK_GUARD}")
    convolution = _square_convolution(limit)
    mismatches = 0
    first_bad = -1
    if convolution[0] != 1:
        mismatches += 1
        first_bad = 0
    for m in range(1, limit + 1):
        lhs = convolution[m]
        rhs = 4 * divisor_excess(m)
        if lhs != rhs or r2_bruteforce(m) != rhs:
            mismatches += 1
            if first_bad < 0:
                first_bad = m
    name = f"two_squares_coefficients[m<={limit}]"
    if mismatches:
        name += f" first_mismatch={first_bad}"
    return VerificationReport.from_values(
        name, computed=mismatches, reference=0, tolerance=0.0
    )
