"""Pure-Python / numpy implementation of the hot numerical kernels.

This module mirrors the compiled extension ``striphilbert._kernels_c``
function for function; ``striphilbert.backend`` picks one of the two at
import time.  Everything here is plain floating-point math:

* scalar series (theta constant, strip kernel, half-period values) run as
  ordinary Python loops with Neumaier-compensated accumulation,
* grid-sized work (synthesis, analysis, the principal-value quadrature
  accumulation) is vectorised with numpy.

All hyperbolic quantities are evaluated in factored exponential form so no
intermediate cosh/sinh ever overflows:

    cosh(4nx) - cosh(x) = 2 sinh((4n+1)x/2) sinh((4n-1)x/2)
                        = e^{4nx} (1 - e^{-(4n+1)x}) (1 - e^{-(4n-1)x}) / 2

and therefore

    2 sinh(x) / (cosh(4nx) - cosh(x))
        = 2 e^{-(4n-1)x} (1 - e^{-2x})
          / ((1 - e^{-(4n+1)x}) (1 - e^{-(4n-1)x})).

Every exponent that appears is negative, so the factored terms stay inside
the representable range for all x > 0 and n >= 1.  The same rearrangement,
with a = pi*s/d and b = 2*pi^2*n/d > a, gives the strip-kernel summand

    2 sinh(a) / (cosh(a) - cosh(b))
        = -2 e^{a-b} (1 - e^{-2a}) / ((1 - e^{-(b+a)}) (1 - e^{-(b-a)})).

Argument validation lives in the public wrapper modules; functions here
assume preconditions hold.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NoConvergence

TWO_PI = 2.0 * math.pi
PI = math.pi

# Hard caps on series loops. They are far beyond anything reachable at desk
# scale and exist so that pathological inputs fail loudly instead of hanging.
_MAX_THETA_TERMS = 5_000_000
_MAX_KERNEL_TERMS = 10_000_000


def _neumaier(total: float, comp: float, term: float) -> tuple[float, float]:
    """One improved-Kahan accumulation step; returns (total, compensation)."""
    t = total + term
    if abs(total) >= abs(term):
        comp += (total - t) + term
    else:
        comp += (term - t) + total
    return t, comp


# ---------------------------------------------------------------------------
# theta constant
# ---------------------------------------------------------------------------

def theta3_sum(q: float, tol: float) -> tuple[float, int, float]:
    """Sum 1 + 2*sum_{n>=1} q^{n^2} to absolute tolerance ``tol``.

    Truncates at the first N whose geometric tail majorant
    2 q^{N^2} / (1 - q^{2N+1}) drops to ``tol`` (q^{m^2 - N^2} <= q^{(m-N)(2N+1)}
    for m >= N).  Returns (value, terms_added, tail_bound).
    """
    if q == 0.0:
        return 1.0, 0, 0.0
    total, comp = 1.0, 0.0
    power = q            # q^{n^2}
    odd = q * q * q      # q^{2n+1}
    qsq = q * q
    n = 1
    while True:
        tail = 2.0 * power / (1.0 - odd)
        if tail <= tol:
            return total + comp, n - 1, tail
        total, comp = _neumaier(total, comp, 2.0 * power)
        power *= odd
        odd *= qsq
        n += 1
        if n > _MAX_THETA_TERMS:
            raise NoConvergence(
                "theta series did not reach tol=%g for q=%.17g; "
                "use the modular transformation for nomes this close to 1" % (tol, q)
            )


def theta3_excess_sum(q: float, tol: float) -> tuple[float, int, float]:
    """Sum 2*sum_{n>=1} q^{n^2} (the value of theta3 - 1) without cancellation.

    The n = 1 term is always included so the result is exactly positive for
    q > 0; the tail rule of :func:`theta3_sum` applies from n = 2 on.
    """
    if q == 0.0:
        return 0.0, 0, 0.0
    total, comp = 2.0 * q, 0.0
    power = q ** 4       # q^{n^2} for n = 2
    odd = q ** 5         # q^{2n+1} for n = 2
    qsq = q * q
    n = 2
    while True:
        tail = 2.0 * power / (1.0 - odd)
        if tail <= tol:
            return total + comp, n - 1, tail
        total, comp = _neumaier(total, comp, 2.0 * power)
        power *= odd
        odd *= qsq
        n += 1
        if n > _MAX_THETA_TERMS:
            raise NoConvergence(
                "theta excess series did not reach tol=%g for q=%.17g" % (tol, q)
            )


# ---------------------------------------------------------------------------
# strip kernel, first representation
# ---------------------------------------------------------------------------

def beta_kernel_series(s: float, d: float, tol: float) -> float:
    """Kernel value at s in (0, 2*pi), depth d > 0, by the hyperbolic series.

    Evaluates -s/d + (pi/d) coth(pi s / 2d) plus the image series in the
    factored exponential form quoted in the module docstring.  The tail after
    the first n terms is bounded by a geometric majorant with ratio
    e^{-2 pi^2 / d}, which is what stops the loop.
    """
    a = PI * s / d
    b1 = TWO_PI * PI / d
    head = -s / d + (PI / d) / math.tanh(0.5 * a)
    # constant pieces of the tail majorant (denominators at their n=1 minimum)
    den1 = -math.expm1(-(b1 + a))
    den2 = -math.expm1(-(b1 - a))
    dengeo = -math.expm1(-b1)
    one_m_e2a = -math.expm1(-2.0 * a)
    scale = PI / d
    acc, comp = 0.0, 0.0
    n = 1
    while True:
        tail = scale * 2.0 * math.exp(a - b1 * n) / (den1 * den2 * dengeo)
        if tail <= tol:
            break
        bn = b1 * n
        mag = (
            2.0
            * math.exp(a - bn)
            * one_m_e2a
            / ((-math.expm1(-(bn + a))) * (-math.expm1(-(bn - a))))
        )
        acc, comp = _neumaier(acc, comp, mag)
        n += 1
        if n > _MAX_KERNEL_TERMS:
            raise NoConvergence(
                "strip kernel series did not reach tol=%g at s=%g, d=%g" % (tol, s, d)
            )
    return head - scale * (acc + comp)


def _coth_residual(v: float) -> float:
    """coth(v) - 1 for v > 0, computed without cancellation."""
    e = math.exp(-2.0 * v)
    return 2.0 * e / (1.0 - e)


def beta_line2_sum(s: float, d: float, terms: int) -> float:
    """Symmetric partial sum of the translated-coth representation.

    Computes -s/d + (pi/d) * sum_{|n|<=terms} (coth(pi (s - 2 pi n) / 2d) + sgn(n))
    with sgn(0) = 0.  Each summand is reduced to a pure-exponential residual
    whenever coth's sign cancels against sgn(n), so no digits are lost; terms
    are accumulated smallest (largest |n|) first.
    """
    c = PI / (2.0 * d)
    acc, comp = 0.0, 0.0
    for n in range(terms, 0, -1):
        shift = TWO_PI * n
        for arg, sgn in ((c * (s - shift), 1.0), (c * (s + shift), -1.0)):
            if arg > 0.0 and sgn < 0.0:
                t = _coth_residual(arg)
            elif arg < 0.0 and sgn > 0.0:
                t = -_coth_residual(-arg)
            else:
                t = 1.0 / math.tanh(arg) + sgn
            acc, comp = _neumaier(acc, comp, t)
    acc, comp = _neumaier(acc, comp, 1.0 / math.tanh(c * s))
    return -s / d + (PI / d) * (acc + comp)


# ---------------------------------------------------------------------------
# half-period value beta_d(pi/2) as a function of x
# ---------------------------------------------------------------------------

def beta_half_raw_sum(x: float, tol: float) -> float:
    """(1/pi) * (2x coth(x/2) - x - 4x sinh(x) sum_n 1/(cosh(4nx)-cosh(x))).

    The head is rewritten as x (1 + 3q)/(1 - q) with q = e^{-x}; the series
    uses the factored summand from the module docstring.  The tail after the
    first n-1 terms is bounded by

        2x * 2 (1-e^{-2x}) e^{-(4n-1)x} / ((1-e^{-5x})(1-e^{-3x})(1-e^{-4x}))

    since the factored denominators are smallest at n = 1 and the numerators
    form a geometric sequence with ratio e^{-4x}.
    """
    q = math.exp(-x)
    head = x * (1.0 + 3.0 * q) / (1.0 - q)
    one_m_e2x = -math.expm1(-2.0 * x)
    den_floor = (-math.expm1(-5.0 * x)) * (-math.expm1(-3.0 * x)) * (-math.expm1(-4.0 * x))
    acc, comp = 0.0, 0.0
    n = 1
    while True:
        tail = 4.0 * x * one_m_e2x * math.exp(-(4.0 * n - 1.0) * x) / den_floor
        if tail <= tol * PI:
            break
        mag = (
            2.0
            * math.exp(-(4.0 * n - 1.0) * x)
            * one_m_e2x
            / ((-math.expm1(-(4.0 * n + 1.0) * x)) * (-math.expm1(-(4.0 * n - 1.0) * x)))
        )
        acc, comp = _neumaier(acc, comp, mag)
        n += 1
        if n > _MAX_KERNEL_TERMS:
            raise NoConvergence("half-period series did not reach tol=%g at x=%g" % (tol, x))
    return (head - 2.0 * x * (acc + comp)) / PI


def beta_half_lambert_sum(x: float, tol: float) -> float:
    """(x/pi) * (1 + 4 sum_n (q^{4n-3}/(1-q^{4n-3}) - q^{4n-1}/(1-q^{4n-1}))).

    Each bracketed pair is fused into the single positive term
    q^{4n-3} (1 - q^2) / ((1 - q^{4n-3})(1 - q^{4n-1})) before accumulation,
    so no cancellation occurs.  Truncation uses the majorant
    8 q^{4N+1} / ((1-q)(1-q^4)) <= tol, tightened by the x/pi prefactor when
    that prefactor exceeds one.
    """
    q = math.exp(-x)
    one_m_q2 = -math.expm1(-2.0 * x)
    one_m_q = -math.expm1(-x)
    one_m_q4 = -math.expm1(-4.0 * x)
    prefac = x / PI
    guard = max(1.0, prefac)
    q4 = q ** 4
    p = q            # q^{4n-3}
    acc, comp = 0.0, 0.0
    n = 1
    while True:
        # first omitted numerator power is q^{4(n-1)+1} = p at loop entry
        tail = guard * 8.0 * p / (one_m_q * one_m_q4)
        if tail <= tol:
            break
        pq2 = p * q * q  # q^{4n-1}
        term = p * one_m_q2 / ((1.0 - p) * (1.0 - pq2))
        acc, comp = _neumaier(acc, comp, term)
        p *= q4
        n += 1
        if n > _MAX_KERNEL_TERMS:
            raise NoConvergence("Lambert series did not reach tol=%g at x=%g" % (tol, x))
    return prefac * (1.0 + 4.0 * (acc + comp))


# ---------------------------------------------------------------------------
# partial sum for the deep-water limit identity
# ---------------------------------------------------------------------------

def limit_partial_sum(terms: int) -> float:
    """sum_{n=1}^{terms} 1/(16 n^2 - 1), accurate to a few ulp.

    Summed in blocks (vectorised, ascending magnitude within the range) with
    exact accumulation of the block sums.
    """
    block = 1 << 20
    partials = []
    hi = terms
    while hi > 0:
        lo = max(0, hi - block)
        n = np.arange(hi, lo, -1, dtype=np.float64)
        partials.append(float(np.sum(1.0 / (16.0 * n * n - 1.0))))
        hi = lo
    return math.fsum(partials)


# ---------------------------------------------------------------------------
# trigonometric synthesis / analysis
# ---------------------------------------------------------------------------

def synthesize_value(cosine: np.ndarray, sine: np.ndarray, x: float) -> float:
    """sum_n a_n cos(nx) + b_n sin(nx), highest n first, compensated."""
    total, comp = 0.0, 0.0
    for n in range(len(cosine), 0, -1):
        a = cosine[n - 1]
        if a != 0.0:
            total, comp = _neumaier(total, comp, a * math.cos(n * x))
        b = sine[n - 1]
        if b != 0.0:
            total, comp = _neumaier(total, comp, b * math.sin(n * x))
    return total + comp


def synthesize_many(cosine: np.ndarray, sine: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Vectorised :func:`synthesize_value` over a grid of evaluation points."""
    xs = np.asarray(xs, dtype=np.float64)
    total = np.zeros_like(xs)
    comp = np.zeros_like(xs)

    def add(term: np.ndarray) -> None:
        nonlocal total, comp
        t = total + term
        comp += np.where(np.abs(total) >= np.abs(term), (total - t) + term, (term - t) + total)
        total = t

    for n in range(len(cosine), 0, -1):
        if cosine[n - 1] != 0.0:
            add(cosine[n - 1] * np.cos(n * xs))
        if sine[n - 1] != 0.0:
            add(sine[n - 1] * np.sin(n * xs))
    return total + comp


def analyze_coeffs(samples: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Discrete coefficients a_n = (2/M) sum_j s_j cos(n x_j) (and b_n alike).

    Uses exact (fsum) accumulation of the M products per coefficient; the
    round-trip contracts downstream demand near-ulp sums.
    """
    samples = np.asarray(samples, dtype=np.float64)
    m = len(samples)
    xs = TWO_PI * np.arange(m) / m
    cos_out = np.empty(order)
    sin_out = np.empty(order)
    for n in range(1, order + 1):
        cos_out[n - 1] = (2.0 / m) * math.fsum((samples * np.cos(n * xs)).tolist())
        sin_out[n - 1] = (2.0 / m) * math.fsum((samples * np.sin(n * xs)).tolist())
    return cos_out, sin_out


# ---------------------------------------------------------------------------
# principal-value quadrature accumulation
# ---------------------------------------------------------------------------

def pv_apply(
    cosine: np.ndarray,
    sine: np.ndarray,
    xs: np.ndarray,
    nodes: np.ndarray,
    weights: np.ndarray,
    kernel_values: np.ndarray,
) -> np.ndarray:
    """sum_i w_i k_i (F(x_j - u_i) - F(x_j + u_i)) for every grid point x_j.

    F is the trigonometric series (cosine, sine); nodes/weights/kernel values
    describe one quadrature panel of the odd-paired principal-value integral.
    """
    xs = np.asarray(xs, dtype=np.float64)
    out = np.zeros_like(xs)
    comp = np.zeros_like(xs)
    for u, w, k in zip(nodes, weights, kernel_values):
        c = w * k
        term = c * (synthesize_many(cosine, sine, xs - u) - synthesize_many(cosine, sine, xs + u))
        t = out + term
        comp += np.where(np.abs(out) >= np.abs(term), (out - t) + term, (term - t) + out)
        out = t
    return out + comp
