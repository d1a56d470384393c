#!/usr/bin/env python3
"""Timing comparison: compiled kernel core versus pure-Python fallback.

Runs every hot kernel on a representative workload with both backends and
prints a speedup table.  Usage:

    python benchmarks/benchmark_backends.py [--repeat N]
"""

import argparse
import math
import time

import numpy as np

from striphilbert import _kernels_py as py_impl

try:
    from striphilbert import _kernels_c as c_impl
except ImportError:
    c_impl = None


def timed(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    rng = np.random.default_rng(42)
    order = 6
    cosine = rng.normal(size=order)
    sine = rng.normal(size=order)
    grid = 2.0 * math.pi * np.arange(2048) / 2048
    nodes = rng.uniform(1e-4, math.pi, size=200)
    weights = rng.uniform(0.0, 0.05, size=200)
    kvals = rng.normal(size=200) * 10.0
    big_samples = py_impl.synthesize_many(cosine, sine, 2.0 * math.pi * np.arange(4096) / 4096)

    def theta_sweep(impl):
        for q in np.linspace(0.0, 0.95, 400):
            impl.theta3_sum(float(q), 1e-13)

    def kernel_sweep(impl):
        for s in np.linspace(1e-3, 6.2, 300):
            impl.beta_kernel_series(float(s), 1.0, 1e-12)

    def half_period_sweep(impl):
        for x in np.geomspace(0.05, 20.0, 300):
            impl.beta_half_raw_sum(float(x), 1e-12)
            impl.beta_half_lambert_sum(float(x), 1e-12)

    def line2_sweep(impl):
        for s in np.linspace(0.1, 6.2, 50):
            impl.beta_line2_sum(float(s), 1.0, 200)

    def limit_sum(impl):
        impl.limit_partial_sum(10**6)

    def pv_panel(impl):
        impl.pv_apply(cosine, sine, grid, nodes, weights, kvals)

    def analyze(impl):
        impl.analyze_coeffs(big_samples, 8)

    return [
        ("theta3_sum (400 nomes)", theta_sweep),
        ("beta_kernel_series (300 pts)", kernel_sweep),
        ("beta_half raw+lambert (300 pts)", half_period_sweep),
        ("beta_line2_sum (50 pts, N=200)", line2_sweep),
        ("limit_partial_sum (n=1e6)", limit_sum),
        ("pv_apply (200 nodes x 2048 grid)", pv_panel),
        ("analyze_coeffs (M=4096, N=8)", analyze),
    ]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'workload':36s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    print("-" * 68)
    for name, fn in workloads():
        t_py = timed(lambda: fn(py_impl), args.repeat)
        if c_impl is None:
            print(f"{name:36s} {t_py * 1e3:9.2f}ms {'n/a':>10s} {'n/a':>8s}")
            continue
        t_c = timed(lambda: fn(c_impl), args.repeat)
        print(
            f"{name:36s} {t_py * 1e3:9.2f}ms {t_c * 1e3:9.2f}ms {t_py / t_c:7.1f}x"
        )
    if c_impl is None:
        print("\ncompiled backend not built; only the fallback was timed")


if __name__ == "__main__":
    main()
