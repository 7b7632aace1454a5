#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Times both backends on representative density grids (one per state
family), checks that they agree, and reports the speedup.

    python benchmarks/bench_kernels.py [--size 200] [--repeat 3]
"""

import argparse
import math
import time

import numpy as np

import landaucs.kernels as kernels


def grid_inputs(size):
    x = np.linspace(-2.0, 16.0, size)
    y = np.linspace(-10.0, 10.0, size)
    X, Y = np.meshgrid(x, y, indexing="ij")
    zeta = 0.5
    xs = X / math.sqrt(zeta)
    ys = Y * math.sqrt(zeta)
    z = 0.5 * (xs + 1j * ys)
    xi = 0.5 * np.hypot(xs, ys)
    theta = np.mod(np.arctan2(ys, xs), 2.0 * math.pi)
    return z, xi, theta


def time_call(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=200, help="grid nodes per axis")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled extension not built; timing the fallback only")

    z, xi, theta = grid_inputs(args.size)
    cases = [
        ("2d    alpha=2, beta=5",
         lambda mod: mod.cs2d_fields(z, 2.0 + 0j, 5.0 + 0j, dxdy_scale=0.5)),
        ("su11  tau=3, m_z=+1",
         lambda mod: mod.su11_fields(xi, theta, 3.0 + 0j, 1, 1.0)),
        ("su11  tau=3, m_z=-2",
         lambda mod: mod.su11_fields(xi, theta, 3.0 + 0j, -2, 1.0)),
    ]

    print(f"grid {args.size} x {args.size} ({z.size} points), "
          f"best of {args.repeat}")
    header = f"{'case':24s} " + "".join(f"{b:>12s}" for b in backends)
    print(header + ("     speedup" if len(backends) > 1 else ""))
    for name, call in cases:
        times = {}
        results = {}
        for b in backends:
            mod = kernels.get_backend(b)
            times[b], results[b] = time_call(lambda m=mod: call(m), args.repeat)
        line = f"{name:24s} " + "".join(f"{times[b] * 1e3:9.1f} ms"
                                        for b in backends)
        if len(backends) > 1:
            u_ref, l_ref = results["numpy"]
            u_fast, l_fast = results["cython"]
            scale = max(np.abs(u_ref).max(), np.abs(l_ref).max())
            dev = max(np.abs(u_ref - u_fast).max(),
                      np.abs(l_ref - l_fast).max()) / scale
            line += f"{times['numpy'] / times['cython']:9.1f}x"
            line += f"   (agreement {dev:.2e})"
        print(line)


if __name__ == "__main__":
    main()
