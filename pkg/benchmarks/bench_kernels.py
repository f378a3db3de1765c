"""Benchmark the compiled solid-angle kernels against the pure-Python
fallbacks.

Usage:
    python benchmarks/bench_kernels.py [--sizes 4096,65536] [--repeats 7]

Times the three hot kernels (azimuth-weighted line sum, pivot-fan spherical
excess, parallel-transport frame propagation) on synthetic closed traces and
reports per-call medians plus the compiled-vs-python speedup.
"""

import argparse
import math
import time

import numpy as np

from vacphase import _kernels_py

try:
    from vacphase import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def synthetic_trace(n, seed=0):
    gen = np.random.default_rng(seed)
    t = np.linspace(0.0, 2.0 * math.pi, n)
    theta = 1.1 + 0.35 * np.sin(2.0 * t + gen.uniform(0.0, 2.0 * math.pi))
    phi = t + 0.25 * np.cos(3.0 * t)
    dirs = np.stack(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)],
        axis=1,
    )
    return (
        np.ascontiguousarray(dirs),
        np.ascontiguousarray(theta),
        np.ascontiguousarray(phi),
    )


def time_call(fn, repeats):
    best = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best.append(time.perf_counter() - start)
    return float(np.median(best))


def run(sizes, repeats):
    pivot = np.array([0.0, 0.0, 1.0])
    header = "%-10s %-16s %12s %12s %9s" % (
        "size",
        "kernel",
        "python [ms]",
        "compiled",
        "speedup",
    )
    print(header)
    print("-" * len(header))
    for n in sizes:
        dirs, theta, phi = synthetic_trace(n)
        e1 = np.cross(pivot, dirs[0])
        e1 /= np.linalg.norm(e1)
        kernels = [
            ("line_sum", lambda mod: mod.line_sum(theta, phi)),
            ("fan_excess", lambda mod: mod.fan_excess(dirs, pivot)),
            ("transport_frame", lambda mod: mod.transport_frame(dirs, e1)),
        ]
        for name, call in kernels:
            t_py = time_call(lambda: call(_kernels_py), repeats)
            if _kernels_c is None:
                print("%-10d %-16s %12.3f %12s %9s" % (n, name, t_py * 1e3, "n/a", "n/a"))
                continue
            t_c = time_call(lambda: call(_kernels_c), repeats)
            a = call(_kernels_py)
            b = call(_kernels_c)
            drift = np.max(np.abs(np.asarray(a) - np.asarray(b)))
            assert drift < 1e-9, "backends disagree by %.3e on %s" % (drift, name)
            print(
                "%-10d %-16s %12.3f %12.3f %8.1fx"
                % (n, name, t_py * 1e3, t_c * 1e3, t_py / max(t_c, 1e-12))
            )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        default="4096,65536",
        help="comma-separated trace lengths to benchmark",
    )
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if _kernels_c is None:
        print("note: compiled extension unavailable; timing pure Python only")
    run(sizes, args.repeats)


if __name__ == "__main__":
    main()
