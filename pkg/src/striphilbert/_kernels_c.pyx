# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot numerical kernels.

Function-for-function mirror of ``striphilbert._kernels_py``; see that
module for the factored exponential forms and tail majorants used here.
Selected by ``striphilbert.backend`` when built.
"""

import numpy as np

from .errors import NoConvergence

from libc.math cimport cos, exp, expm1, fabs, log, sin, sqrt, tanh

cdef double PI = 3.141592653589793238462643383279502884
cdef double TWO_PI = 2.0 * PI

cdef long _MAX_THETA_TERMS = 5_000_000
cdef long _MAX_KERNEL_TERMS = 10_000_000


def theta3_sum(double q, double tol):
    """Sum 1 + 2*sum_{n>=1} q^{n^2}; returns (value, terms_added, tail_bound)."""
    cdef double total = 1.0
    cdef double comp = 0.0
    cdef double power, odd, qsq, tail, term, t
    cdef long n = 1
    if q == 0.0:
        return 1.0, 0, 0.0
    power = q
    odd = q * q * q
    qsq = q * q
    while True:
        tail = 2.0 * power / (1.0 - odd)
        if tail <= tol:
            return total + comp, n - 1, tail
        term = 2.0 * power
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        power *= odd
        odd *= qsq
        n += 1
        if n > _MAX_THETA_TERMS:
            raise NoConvergence(
                "theta series did not reach tol=%g for q=%.17g; "
                "use the modular transformation for nomes this close to 1" % (tol, q)
            )


def theta3_excess_sum(double q, double tol):
    """Sum 2*sum_{n>=1} q^{n^2}; the n=1 term is always included."""
    cdef double total, comp = 0.0
    cdef double power, odd, qsq, tail, term, t
    cdef long n = 2
    if q == 0.0:
        return 0.0, 0, 0.0
    total = 2.0 * q
    power = q * q * q * q
    odd = power * q
    qsq = q * q
    while True:
        tail = 2.0 * power / (1.0 - odd)
        if tail <= tol:
            return total + comp, n - 1, tail
        term = 2.0 * power
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        power *= odd
        odd *= qsq
        n += 1
        if n > _MAX_THETA_TERMS:
            raise NoConvergence(
                "theta excess series did not reach tol=%g for q=%.17g" % (tol, q)
            )


def beta_kernel_series(double s, double d, double tol):
    """Kernel value at s in (0, 2*pi) by the factored hyperbolic series."""
    cdef double a = PI * s / d
    cdef double b1 = TWO_PI * PI / d
    cdef double head = -s / d + (PI / d) / tanh(0.5 * a)
    cdef double den1 = -expm1(-(b1 + a))
    cdef double den2 = -expm1(-(b1 - a))
    cdef double dengeo = -expm1(-b1)
    cdef double one_m_e2a = -expm1(-2.0 * a)
    cdef double scale = PI / d
    cdef double acc = 0.0
    cdef double comp = 0.0
    cdef double tail, bn, mag, t
    cdef long n = 1
    while True:
        tail = scale * 2.0 * exp(a - b1 * n) / (den1 * den2 * dengeo)
        if tail <= tol:
            break
        bn = b1 * n
        mag = 2.0 * exp(a - bn) * one_m_e2a / ((-expm1(-(bn + a))) * (-expm1(-(bn - a))))
        t = acc + mag
        if fabs(acc) >= mag:
            comp += (acc - t) + mag
        else:
            comp += (mag - t) + acc
        acc = t
        n += 1
        if n > _MAX_KERNEL_TERMS:
            raise NoConvergence(
                "strip kernel series did not reach tol=%g at s=%g, d=%g" % (tol, s, d)
            )
    return head - scale * (acc + comp)


cdef inline double _coth_residual(double v):
    # coth(v) - 1 for v > 0, cancellation-free
    cdef double e = exp(-2.0 * v)
    return 2.0 * e / (1.0 - e)


def beta_line2_sum(double s, double d, long terms):
    """Symmetric partial sum of the translated-coth representation."""
    cdef double c = PI / (2.0 * d)
    cdef double acc = 0.0
    cdef double comp = 0.0
    cdef double shift, arg, sgn, term, t
    cdef long n
    cdef int side
    for n in range(terms, 0, -1):
        shift = TWO_PI * n
        for side in range(2):
            if side == 0:
                arg = c * (s - shift)
                sgn = 1.0
            else:
                arg = c * (s + shift)
                sgn = -1.0
            if arg > 0.0 and sgn < 0.0:
                term = _coth_residual(arg)
            elif arg < 0.0 and sgn > 0.0:
                term = -_coth_residual(-arg)
            else:
                term = 1.0 / tanh(arg) + sgn
            t = acc + term
            if fabs(acc) >= fabs(term):
                comp += (acc - t) + term
            else:
                comp += (term - t) + acc
            acc = t
    term = 1.0 / tanh(c * s)
    t = acc + term
    if fabs(acc) >= fabs(term):
        comp += (acc - t) + term
    else:
        comp += (term - t) + acc
    acc = t
    return -s / d + (PI / d) * (acc + comp)


def beta_half_raw_sum(double x, double tol):
    """(1/pi)(2x coth(x/2) - x - 4x sinh(x) sum 1/(cosh 4nx - cosh x))."""
    cdef double q = exp(-x)
    cdef double head = x * (1.0 + 3.0 * q) / (1.0 - q)
    cdef double one_m_e2x = -expm1(-2.0 * x)
    cdef double den_floor = (-expm1(-5.0 * x)) * (-expm1(-3.0 * x)) * (-expm1(-4.0 * x))
    cdef double acc = 0.0
    cdef double comp = 0.0
    cdef double tail, mag, t, en
    cdef long n = 1
    while True:
        en = exp(-(4.0 * n - 1.0) * x)
        tail = 4.0 * x * one_m_e2x * en / den_floor
        if tail <= tol * PI:
            break
        mag = 2.0 * en * one_m_e2x / ((-expm1(-(4.0 * n + 1.0) * x)) * (-expm1(-(4.0 * n - 1.0) * x)))
        t = acc + mag
        if fabs(acc) >= mag:
            comp += (acc - t) + mag
        else:
            comp += (mag - t) + acc
        acc = t
        n += 1
        if n > _MAX_KERNEL_TERMS:
            raise NoConvergence("half-period series did not reach tol=%g at x=%g" % (tol, x))
    return (head - 2.0 * x * (acc + comp)) / PI


def beta_half_lambert_sum(double x, double tol):
    """(x/pi)(1 + 4 sum_n fused Lambert pair), pairs fused before summing."""
    cdef double q = exp(-x)
    cdef double one_m_q2 = -expm1(-2.0 * x)
    cdef double one_m_q = -expm1(-x)
    cdef double one_m_q4 = -expm1(-4.0 * x)
    cdef double prefac = x / PI
    cdef double guard = prefac if prefac > 1.0 else 1.0
    cdef double q4 = q * q * q * q
    cdef double p = q
    cdef double acc = 0.0
    cdef double comp = 0.0
    cdef double tail, pq2, term, t
    cdef long n = 1
    while True:
        tail = guard * 8.0 * p / (one_m_q * one_m_q4)
        if tail <= tol:
            break
        pq2 = p * q * q
        term = p * one_m_q2 / ((1.0 - p) * (1.0 - pq2))
        t = acc + term
        if fabs(acc) >= term:
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
        p *= q4
        n += 1
        if n > _MAX_KERNEL_TERMS:
            raise NoConvergence("Lambert series did not reach tol=%g at x=%g" % (tol, x))
    return prefac * (1.0 + 4.0 * (acc + comp))


def limit_partial_sum(long terms):
    """sum_{n=1}^{terms} 1/(16 n^2 - 1), ascending magnitude, compensated."""
    cdef double total = 0.0
    cdef double comp = 0.0
    cdef double term, t, dn
    cdef long n
    for n in range(terms, 0, -1):
        dn = <double> n
        term = 1.0 / (16.0 * dn * dn - 1.0)
        t = total + term
        if fabs(total) >= term:
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return total + comp


def synthesize_value(cosine, sine, double x):
    """sum_n a_n cos(nx) + b_n sin(nx), highest n first, compensated."""
    cdef const double[::1] a = np.ascontiguousarray(cosine, dtype=np.float64)
    cdef const double[::1] b = np.ascontiguousarray(sine, dtype=np.float64)
    cdef double total = 0.0
    cdef double comp = 0.0
    cdef double term, t
    cdef long n
    for n in range(a.shape[0], 0, -1):
        if a[n - 1] != 0.0:
            term = a[n - 1] * cos(n * x)
            t = total + term
            if fabs(total) >= fabs(term):
                comp += (total - t) + term
            else:
                comp += (term - t) + total
            total = t
        if b[n - 1] != 0.0:
            term = b[n - 1] * sin(n * x)
            t = total + term
            if fabs(total) >= fabs(term):
                comp += (total - t) + term
            else:
                comp += (term - t) + total
            total = t
    return total + comp


def synthesize_many(cosine, sine, xs):
    """Vectorised synthesize_value over a grid."""
    cdef const double[::1] a = np.ascontiguousarray(cosine, dtype=np.float64)
    cdef const double[::1] b = np.ascontiguousarray(sine, dtype=np.float64)
    cdef const double[::1] grid = np.ascontiguousarray(xs, dtype=np.float64)
    out_arr = np.empty(grid.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double total, comp, term, t, x
    cdef long j, n
    for j in range(grid.shape[0]):
        x = grid[j]
        total = 0.0
        comp = 0.0
        for n in range(a.shape[0], 0, -1):
            if a[n - 1] != 0.0:
                term = a[n - 1] * cos(n * x)
                t = total + term
                if fabs(total) >= fabs(term):
                    comp += (total - t) + term
                else:
                    comp += (term - t) + total
                total = t
            if b[n - 1] != 0.0:
                term = b[n - 1] * sin(n * x)
                t = total + term
                if fabs(total) >= fabs(term):
                    comp += (total - t) + term
                else:
                    comp += (term - t) + total
                total = t
        out[j] = total + comp
    return out_arr


def analyze_coeffs(samples, long order):
    """a_n = (2/M) sum_j s_j cos(n x_j) and b_n alike, Neumaier-compensated."""
    cdef const double[::1] s = np.ascontiguousarray(samples, dtype=np.float64)
    cdef long m = s.shape[0]
    cos_arr = np.empty(order, dtype=np.float64)
    sin_arr = np.empty(order, dtype=np.float64)
    cdef double[::1] cos_out = cos_arr
    cdef double[::1] sin_out = sin_arr
    cdef double ca, cc, sa, sc, term, t, xj
    cdef long n, j
    for n in range(1, order + 1):
        ca = 0.0
        cc = 0.0
        sa = 0.0
        sc = 0.0
        for j in range(m):
            xj = TWO_PI * j / m
            term = s[j] * cos(n * xj)
            t = ca + term
            if fabs(ca) >= fabs(term):
                cc += (ca - t) + term
            else:
                cc += (term - t) + ca
            ca = t
            term = s[j] * sin(n * xj)
            t = sa + term
            if fabs(sa) >= fabs(term):
                sc += (sa - t) + term
            else:
                sc += (term - t) + sa
            sa = t
        cos_out[n - 1] = (2.0 / m) * (ca + cc)
        sin_out[n - 1] = (2.0 / m) * (sa + sc)
    return cos_arr, sin_arr


def pv_apply(cosine, sine, xs, nodes, weights, kernel_values):
    """sum_i w_i k_i (F(x_j - u_i) - F(x_j + u_i)) for every grid point x_j."""
    cdef const double[::1] a = np.ascontiguousarray(cosine, dtype=np.float64)
    cdef const double[::1] b = np.ascontiguousarray(sine, dtype=np.float64)
    cdef const double[::1] grid = np.ascontiguousarray(xs, dtype=np.float64)
    cdef const double[::1] u = np.ascontiguousarray(nodes, dtype=np.float64)
    cdef const double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef const double[::1] k = np.ascontiguousarray(kernel_values, dtype=np.float64)
    out_arr = np.zeros(grid.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double total, comp, term, t, c, x, fm, fp, fmc, fpc, tm
    cdef long j, i, n
    for j in range(grid.shape[0]):
        x = grid[j]
        total = 0.0
        comp = 0.0
        for i in range(u.shape[0]):
            c = w[i] * k[i]
            # F(x - u) and F(x + u), each compensated over the harmonics
            fm = 0.0
            fmc = 0.0
            fp = 0.0
            fpc = 0.0
            for n in range(a.shape[0], 0, -1):
                if a[n - 1] != 0.0:
                    tm = a[n - 1] * cos(n * (x - u[i]))
                    t = fm + tm
                    if fabs(fm) >= fabs(tm):
                        fmc += (fm - t) + tm
                    else:
                        fmc += (tm - t) + fm
                    fm = t
                    tm = a[n - 1] * cos(n * (x + u[i]))
                    t = fp + tm
                    if fabs(fp) >= fabs(tm):
                        fpc += (fp - t) + tm
                    else:
                        fpc += (tm - t) + fp
                    fp = t
                if b[n - 1] != 0.0:
                    tm = b[n - 1] * sin(n * (x - u[i]))
                    t = fm + tm
                    if fabs(fm) >= fabs(tm):
                        fmc += (fm - t) + tm
                    else:
                        fmc += (tm - t) + fm
                    fm = t
                    tm = b[n - 1] * sin(n * (x + u[i]))
                    t = fp + tm
                    if fabs(fp) >= fabs(tm):
                        fpc += (fp - t) + tm
                    else:
                        fpc += (tm - t) + fp
                    fp = t
            term = c * ((fm + fmc) - (fp + fpc))
            t = total + term
            if fabs(total) >= fabs(term):
                comp += (total - t) + term
            else:
                comp += (term - t) + total
            total = t
        out[j] = total + comp
    return out_arr
