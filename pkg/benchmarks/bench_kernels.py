#!/usr/bin/env python3
"""Benchmark the walk kernels: pure-Python/numpy fallback vs compiled core.

Runs the same message schedule through every available backend, times it,
and verifies the outputs are bit-for-bit identical.  Typical use:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 4,6,8 --message-bits 48 --repeats 500
"""

import argparse
import time

import numpy as np

from hanoihash import HashParams
from hanoihash._kernels import available_backends, get_backend
from hanoihash.rng import XorShift64Star
from hanoihash.walk import WalkEngine


def time_backend(run_schedule, state, coins, coin_idx, shift_idx, gathers, repeats):
    """Best-of-run wall time per schedule application, in seconds."""
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = run_schedule(state, coins, coin_idx, shift_idx, gathers)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="3,4,5,6,8",
                        help="comma-separated n values (2**n vertices each)")
    parser.add_argument("--message-bits", type=int, default=24)
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if len(backends) < 2:
        print("note: compiled core not built; timing the fallback only")

    rng = XorShift64Star(args.seed)
    message = rng.bits(args.message_bits)

    header = f"{'n':>3} {'N_v':>6} {'steps':>6}"
    for name in backends:
        header += f" {name + ' (us)':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>8} {'identical':>9}"
    print(header)

    for chunk in args.sizes.split(","):
        n = int(chunk)
        engine = WalkEngine(HashParams(n=n))
        coin_idx, shift_idx = engine.schedule(message)
        state = engine.initial_state()
        row = f"{n:>3} {engine.topology.n_vertices:>6} {len(coin_idx):>6}"
        times = []
        outputs = []
        for name in backends:
            best, out = time_backend(
                get_backend(name).run_schedule, state, engine.coins, coin_idx,
                shift_idx, engine.topology.gathers, args.repeats,
            )
            times.append(best)
            outputs.append(out)
            row += f" {1e6 * best:>14.1f}"
        if len(backends) == 2:
            same = bool(np.array_equal(outputs[0], outputs[1]))
            speedup = times[backends.index("purepy")] / times[backends.index("compiled")]
            row += f" {speedup:>8.1f} {str(same):>9}"
            if not same:
                print(row)
                print("ERROR: backends disagree bitwise")
                return 1
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
