#!/usr/bin/env python3
"""Time the numba kernels against their numpy counterparts.

    python benchmarks/bench_kernels.py [--repeat 20]

The first call of every numba kernel is made before timing so compilation
(or cache loading) is excluded.
"""

import argparse
import time

import numpy as np

from entroportrait import kernels
from entroportrait._accel import HAVE_NUMBA
from entroportrait.density_core import random_density
from entroportrait.stochastic_portrait import Factorization, build_M12


def best_of(fn, args, repeat):
    fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    P12 = rng.dirichlet(np.ones(12), size=10_000)
    P6 = rng.dirichlet(np.ones(6), size=720)
    yield "xlogx_rows 1e4x12", "xlogx_rows", (P12,)
    yield "marginal_rows 1e4x12 (3,4)", "marginal_rows", (P12, 3, 4)
    yield "information_rows 1e4x12 (3,4)", "information_rows", (P12, 3, 4)
    yield "information_rows 720x6 (2,3)", "information_rows", (P6, 2, 3)
    for N, M in ((2, 3), (4, 6), (8, 8)):
        rho = random_density(N * M, seed=1)
        m12 = build_M12(Factorization(N, M))
        yield f"portrait_first_rj {N}x{M}", "portrait_first_rj", (rho, m12, N, M)
        yield f"partial_trace {N}x{M}", "partial_trace", (rho, N, M, True)
        yield f"partial_transpose {N}x{M}", "partial_transpose_second", (rho, N, M)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    if not HAVE_NUMBA:
        print("numba is not installed; nothing to compare")
        return
    print(f"{'kernel':34s} {'numba [us]':>12s} {'numpy [us]':>12s} {'speedup':>8s}")
    for label, name, fargs in cases():
        t_nb = best_of(getattr(kernels, name + "_nb"), fargs, args.repeat)
        t_np = best_of(getattr(kernels, name + "_np"), fargs, args.repeat)
        print(f"{label:34s} {t_nb * 1e6:12.1f} {t_np * 1e6:12.1f} {t_np / t_nb:8.2f}")


if __name__ == "__main__":
    main()
