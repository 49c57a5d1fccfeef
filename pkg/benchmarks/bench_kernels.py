#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Covers the two jitted kernels (cyclic Jacobi eigenvalue sweeps, certified
int64 matrix product) plus the object-dtype exact product for scale.
Run directly:

    python benchmarks/bench_kernels.py [--sizes 60 120 240]

The numbers also show what SPECGAP_DISABLE_NUMBA=1 costs.
"""

import argparse
import time

import numpy as np

import specgap as sg
import specgap._kernels as kernels


def _time(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_jacobi(sizes):
    print("cyclic Jacobi eigenvalues (tol 1e-12)")
    print(f"  {'n':>5} | {'numba':>10} | {'numpy':>10} | speedup")
    for n in sizes:
        g = sg.random_regular(n, 2, seed=n)
        a = np.array(g.adjacency.data.tolist(), dtype=np.float64)
        if kernels.HAVE_NUMBA:
            kernels.jacobi_eigenvalues_numba(a.copy(), 1e-12, 100)  # warm the JIT
            t_nb = _time(kernels.jacobi_eigenvalues_numba, a.copy(), 1e-12, 100)
        else:
            t_nb = float("nan")
        t_np = _time(kernels.jacobi_eigenvalues_numpy, a.copy(), 1e-12, 100)
        ratio = t_np / t_nb if t_nb == t_nb else float("nan")
        print(f"  {n:>5} | {t_nb * 1e3:>8.2f}ms | {t_np * 1e3:>8.2f}ms | {ratio:>6.1f}x")
    print()


def bench_matmul(sizes):
    rng = np.random.default_rng(0)
    print("matrix product, entries certified to fit int64")
    print(f"  {'n':>5} | {'numba':>10} | {'numpy @':>10} | {'object @':>10}")
    for n in sizes:
        a = rng.integers(-999, 999, size=(n, n)).astype(np.int64)
        b = rng.integers(-999, 999, size=(n, n)).astype(np.int64)
        obj_a = np.array(a.tolist(), dtype=object)
        obj_b = np.array(b.tolist(), dtype=object)
        if kernels.HAVE_NUMBA:
            kernels.matmul_int64_numba(a, b)  # warm the JIT
            t_nb = _time(kernels.matmul_int64_numba, a, b)
        else:
            t_nb = float("nan")
        t_np = _time(kernels.matmul_int64_numpy, a, b)
        t_obj = _time(lambda: obj_a @ obj_b)
        print(f"  {n:>5} | {t_nb * 1e3:>8.2f}ms | {t_np * 1e3:>8.2f}ms | {t_obj * 1e3:>8.2f}ms")
    print()


def bench_end_to_end(sizes):
    print("full spectrum through the package surface (selected backend: "
          f"{kernels.backend()})")
    for n in sizes:
        g = sg.random_regular(n, 2, seed=n)
        t = _time(sg.adjacency_spectrum, g)
        print(f"  n={n:>4}: {t * 1e3:.2f}ms")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[60, 120, 240])
    args = parser.parse_args()
    if not kernels.HAVE_NUMBA:
        print("note: numba backend unavailable or disabled; numba columns are nan\n")
    bench_jacobi(args.sizes)
    bench_matmul(args.sizes)
    bench_end_to_end(args.sizes)


if __name__ == "__main__":
    main()
