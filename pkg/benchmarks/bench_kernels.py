"""Benchmark the compiled exact-arithmetic kernels against the pure-Python
fallback.

Micro benchmarks call both backends directly on identical seeded inputs;
--sweep additionally times the full degree-4 symmetrization sweep through
each backend in a subprocess (DUFLO_PURE=1 forces the fallback).

Usage:
    python benchmarks/bench_kernels.py [--size N] [--reps K] [--sweep]
"""

import argparse
import os
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from duflo import _kernels_py  # noqa: E402
from duflo.rng import SplitMix64  # noqa: E402

try:
    from duflo import _speedups
except ImportError:
    _speedups = None


def _random_pairs(rng, count, span=99):
    nums = [rng.below(2 * span + 1) - span for _ in range(count)]
    dens = [rng.below(12) + 1 for _ in range(count)]
    return nums, dens


def _time(fn, reps):
    best = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def bench_micro(size: int, reps: int):
    rng = SplitMix64(42)
    anum, aden = _random_pairs(rng, size * size)
    bnum, bden = _random_pairs(rng, size * size)
    rows = [[rng.below(199) - 99 for _ in range(size * 2)] for _ in range(size)]

    jobs = {
        f"matmul {size}x{size}": lambda impl: impl.matmul_pairs(
            anum, aden, bnum, bden, size, size, size
        ),
        f"rref {size}x{size * 2}": lambda impl: impl.rref_int(rows, size, size * 2),
    }
    print(f"{'kernel':<18}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, job in jobs.items():
        t_py, out_py = _time(lambda: job(_kernels_py), reps)
        if _speedups is None:
            print(f"{name:<18}{t_py * 1e3:>10.2f}ms{'-':>12}{'-':>10}")
            continue
        t_cy, out_cy = _time(lambda: job(_speedups), reps)
        assert out_py == out_cy, f"{name}: backends disagree"
        print(
            f"{name:<18}{t_py * 1e3:>10.2f}ms{t_cy * 1e3:>10.2f}ms"
            f"{t_py / t_cy:>9.2f}x"
        )


SWEEP_SNIPPET = """
import time
from duflo import kernels, catalog
from duflo.pbw import SymElement, check_pbw_diagram, sym_basis
t0 = time.perf_counter()
for name in ["abelian2", "heisenberg3", "sl2", "gl2"]:
    alg = catalog.load_algebra(name)
    for rep in catalog.representations(alg).values():
        for d in range(1, 5):
            for m in sym_basis(alg.dim, d):
                assert check_pbw_diagram(rep, SymElement.monomial(m)).equal
print(f"{kernels.BACKEND}: {time.perf_counter() - t0:.3f}s")
"""


def bench_sweep():
    print("\nfull degree-4 diagram sweep per backend:", flush=True)
    for pure in ("", "1"):
        env = dict(os.environ)
        if pure:
            env["DUFLO_PURE"] = pure
        else:
            env.pop("DUFLO_PURE", None)
        subprocess.run([sys.executable, "-c", SWEEP_SNIPPET], env=env, check=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=30)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--sweep", action="store_true")
    args = ap.parse_args()
    if _speedups is None:
        print("note: compiled backend not available, timing fallback only")
    bench_micro(args.size, args.reps)
    if args.sweep:
        bench_sweep()


if __name__ == "__main__":
    main()
