"""Time the compiled and NumPy WENO right-hand sides, and one full run of each.

Usage: python3 benchmarks/bench_kernels.py [--repeat 200] [--sizes 200,800,3200]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from riemann_limits.weno import _backend


def time_rhs(fn, n, repeat, rng):
    rho = rng.uniform(0.1, 5.0, n)
    v = rng.uniform(-2.0, 2.0, n)
    fn(rho, v, 0.4, 0.25, 2.0 / n)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(rho, v, 0.4, 0.25, 2.0 / n)
    return (time.perf_counter() - t0) / repeat


def time_simulation(pure: bool) -> float:
    """Wall time of the two-shock run at N=800 in a fresh interpreter."""
    env = dict(os.environ)
    if pure:
        env["RIEMANN_LIMITS_PURE_PYTHON"] = "1"
    code = (
        "import time\n"
        "from riemann_limits.core import RiemannSetup\n"
        "from riemann_limits.weno import SimConfig, simulate\n"
        "s = RiemannSetup.from_values(1.5, 2.0, 2.0, -1.0, 1.5, 2.0)\n"
        "t0 = time.perf_counter(); simulate(SimConfig(s, n_cells=800))\n"
        "print(time.perf_counter() - t0)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--sizes", default="200,800,3200")
    args = ap.parse_args()

    rng = np.random.default_rng(1)
    print(f"backend selected at import: {_backend.BACKEND}")
    if _backend.compiled_rhs is None:
        print("compiled kernel not available; only the NumPy kernel is timed")
    print(f"{'n':>6} {'numpy [us]':>12} {'cython [us]':>12} {'speed-up':>9}")
    for n in (int(s) for s in args.sizes.split(",")):
        tp = time_rhs(_backend.python_rhs, n, args.repeat, rng)
        if _backend.compiled_rhs is not None:
            tc = time_rhs(_backend.compiled_rhs, n, args.repeat, rng)
            print(f"{n:>6} {tp * 1e6:>12.1f} {tc * 1e6:>12.1f} {tp / tc:>9.1f}")
        else:
            print(f"{n:>6} {tp * 1e6:>12.1f} {'-':>12} {'-':>9}")

    tp = time_simulation(pure=True)
    print(f"two-shock run, N=800: numpy {tp:.2f} s", end="")
    if _backend.compiled_rhs is not None:
        tc = time_simulation(pure=False)
        print(f", cython {tc:.2f} s ({tp / tc:.1f}x)")
    else:
        print()


if __name__ == "__main__":
    main()
