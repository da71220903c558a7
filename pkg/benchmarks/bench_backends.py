#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot entry points (equilibrium solve, bend potential,
tip force) on batches of random but reproducible inputs, plus one full
anchor calibration per backend.  Run:

    python benchmarks/bench_backends.py [--size 4096] [--repeat 5]

The numba path pays a one-time JIT cost that is excluded by a warm-up
call before timing.
"""

import argparse
import time

import numpy as np

from bpactuator import _kernels_numpy
from bpactuator import calibration
from bpactuator.calibration import anchor_dataset

try:
    from bpactuator import _kernels_numba
except ImportError:
    _kernels_numba = None


def make_batch(size: int, seed: int = 7):
    rng = np.random.default_rng(seed)
    b = rng.uniform(22.0, 45.0, size)
    amp = np.full(size, 7.5)
    drive = rng.uniform(0.0, 1.2, size)
    spring = rng.uniform(30.0, 500.0, size)
    n = np.maximum(np.floor(120.0 / b), 1.0)
    height = np.full(size, 19.8)
    arm = np.full(size, 140.0)
    push = np.full(size, 2.0)
    phi = rng.uniform(0.0, 0.2, size)
    return b, amp, drive, spring, n, height, arm, push, phi


def time_kernels(impl, batch, repeat: int):
    b, amp, drive, spring, n, height, arm, push, phi = batch
    cap = impl.theta_cap(b, amp)
    results = {}
    for name, fn in [
        ("equilibrium_theta", lambda: impl.equilibrium_theta(drive, spring, b, cap)),
        ("bend_potential", lambda: impl.bend_potential(phi, drive, spring, b, n, height, cap)),
        ("tip_force", lambda: impl.tip_force(drive, spring, b, n, height, cap, arm, push)),
    ]:
        fn()  # warm-up (JIT compile on the numba path)
        best = min(_timed(fn) for _ in range(repeat))
        results[name] = best
    return results


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def time_fit(impl) -> float:
    # route the calibration through the chosen kernels
    from bpactuator import _backend
    saved = _backend._impl
    _backend._impl = impl
    try:
        dataset = anchor_dataset()
        calibration.fit(dataset)  # warm-up
        t0 = time.perf_counter()
        calibration.fit(dataset)
        return time.perf_counter() - t0
    finally:
        _backend._impl = saved


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=4096)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    batch = make_batch(args.size)
    impls = [("numpy", _kernels_numpy)]
    if _kernels_numba is not None:
        impls.append(("numba", _kernels_numba))
    else:
        print("numba unavailable; timing the numpy fallback only")

    rows = {}
    for name, impl in impls:
        rows[name] = time_kernels(impl, batch, args.repeat)
        rows[name]["anchor_fit"] = time_fit(impl)

    kernels = list(next(iter(rows.values())))
    print(f"\nbatch size {args.size}, best of {args.repeat}")
    header = f"{'kernel':<20}" + "".join(f"{n:>12}" for n in rows)
    if len(rows) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for k in kernels:
        line = f"{k:<20}" + "".join(f"{rows[n][k] * 1e3:>10.3f}ms" for n in rows)
        if len(rows) == 2:
            line += f"{rows['numpy'][k] / rows['numba'][k]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
