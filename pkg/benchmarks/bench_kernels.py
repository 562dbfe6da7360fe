"""Compare the pure-Python and compiled enumeration kernels.

Usage: python benchmarks/bench_kernels.py [--vars N] [--repeat R]

Times weighted_true_sum and minimal_true_points on a random N-variable
truth table (default N=20, i.e. a 1 MiB table) for each available backend.
"""

from __future__ import annotations

import argparse
import random
import time
from array import array

from cftkit._kernels import BACKEND, pure

try:
    from cftkit._kernels import _fast
except ImportError:
    _fast = None


def time_call(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--vars", type=int, default=20, metavar="N")
    parser.add_argument("--repeat", type=int, default=3, metavar="R")
    args = parser.parse_args()

    n = args.vars
    rng = random.Random(12345)
    # a random monotone-ish function would be atypical; a plain random
    # table exercises the worst case for minimal_true_points
    table = rng.getrandbits(1 << n).to_bytes(((1 << n) + 7) // 8, "little")
    probs = array("d", [rng.uniform(0.001, 0.2) for _ in range(n)])

    backends = [("pure", pure)]
    if _fast is not None:
        backends.append(("compiled", _fast))

    print(f"active backend: {BACKEND}")
    print(f"table: {n} variables, {1 << n} rows, {len(table)} bytes")
    results = {}
    for name, mod in backends:
        t_sum = time_call(mod.weighted_true_sum, table, n, probs, repeat=args.repeat)
        t_mcs = time_call(mod.minimal_true_points, table, n, repeat=args.repeat)
        results[name] = (t_sum, t_mcs)
        print(f"{name:>9}: weighted_true_sum {t_sum * 1e3:9.2f} ms"
              f"   minimal_true_points {t_mcs * 1e3:9.2f} ms")

    if "compiled" in results:
        for idx, label in ((0, "weighted_true_sum"), (1, "minimal_true_points")):
            speedup = results["pure"][idx] / results["compiled"][idx]
            print(f"speedup ({label}): {speedup:.1f}x")


if __name__ == "__main__":
    main()
