#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-numpy fallback.

Times the five numerical kernels on random positive definite and
structured-class inputs across a range of sizes and prints a table of
per-call medians.  The compiled backend is warmed up before timing so
JIT compilation is not counted.

Usage:
    python3 benchmarks/bench_backends.py [--sizes 20 50 100] [--repeats 7]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

import growthcert._kernels_numpy as numpy_impl
from growthcert.generators import SamplerConfig, random_higham, random_spd

try:
    import growthcert._kernels_numba as numba_impl
except ImportError:  # pragma: no cover - numba not installed
    numba_impl = None


def _inputs(n: int) -> dict[str, np.ndarray]:
    spd = random_spd(SamplerConfig(n=n, omega=1e4, seed=n))
    member = random_higham(SamplerConfig(n=n, omega=50.0, seed=n)).matrix
    return {"spd": spd, "member": member}


def _kernel_calls(impl, data: dict[str, np.ndarray]):
    n = data["spd"].shape[0]
    tol = 1e-13 * n * np.abs(data["member"]).max()
    chol_tol = 1e-12 * n * np.abs(data["spd"]).max()
    return {
        "cholesky_lower": lambda: impl.cholesky_lower(data["spd"], chol_tol),
        "jacobi_eigh": lambda: impl.jacobi_eigh(data["spd"]),
        "eliminate_packed": lambda: impl.eliminate_packed(data["member"].copy(), tol),
        "schur_complement": lambda: impl.schur_complement_dense(
            data["member"], n // 2, tol
        ),
        "lu_determinant": lambda: impl.lu_determinant(data["member"].copy()),
    }


def _time_call(call, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        call()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 50, 100])
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    backends = [("numpy", numpy_impl)]
    if numba_impl is not None:
        backends.append(("numba", numba_impl))
        # JIT warm-up on a small input so compilation is excluded from timing
        for call in _kernel_calls(numba_impl, _inputs(5)).values():
            call()
    else:
        print("numba backend unavailable; timing the fallback only")

    header = f"{'kernel':<18} {'n':>4} " + " ".join(
        f"{name + ' (ms)':>12}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for n in args.sizes:
        data = _inputs(n)
        per_backend = {
            name: _kernel_calls(impl, data) for name, impl in backends
        }
        for kernel in _kernel_calls(numpy_impl, data):
            timings = [
                _time_call(per_backend[name][kernel], args.repeats)
                for name, _ in backends
            ]
            row = f"{kernel:<18} {n:>4} " + " ".join(
                f"{t * 1e3:>12.3f}" for t in timings
            )
            if len(timings) == 2 and timings[1] > 0:
                row += f" {timings[0] / timings[1]:>7.1f}x"
            print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
